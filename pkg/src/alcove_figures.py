"""
SVG pictures of admissible sets as unions of alcoves, for rank m ≤ 2.
"""

import io
from pathlib import Path
from typing import Iterable, Optional

import matplotlib

matplotlib.use('svg')
matplotlib.rcParams.update({
    'svg.hashsalt': 'localmodels',
    'svg.fonttype': 'none',
    'font.family': 'DejaVu Sans',
    'axes.unicode_minus': False,
})
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from src.weyl import (  # noqa: E402
    AffineWeylElement, admissible_set, admissible_set_for, build_affine_data, extreme_elements, length,
)

EXTREME_COLOR = '#2c5282'
INTERIOR_COLOR = '#90cdf4'
BASE_COLOR = '#c53030'


def alcove_vertices(w: AffineWeylElement) -> np.ndarray:
    """Vertices of w·(base alcove) in ordinary coordinates x = y/2."""
    data = build_affine_data(w.n)
    doubled = [tuple(int(2 * c) for c in v) for v in data.vertices]
    return np.array([w.act(y) for y in doubled], dtype=float) / 2


def _check_rank(n):
    m = n // 2
    if m > 2:
        raise ValueError(f"SVG figures need rank m ≤ 2 (n ≤ 5), got n={n}")
    return m


def _render(n, elements: Iterable[AffineWeylElement], extremes, title, target):
    """
    Fill one alcove per element; extremes are drawn darker and the base
    alcove is outlined. `target` is a path or a text buffer.
    """
    m = _check_rank(n)
    extremes = set(extremes)
    elements = sorted(elements, key=lambda w: (length(w), w.t, w.perm, w.signs))
    fig, ax = plt.subplots(figsize=(5.0, 5.0 if m == 2 else 1.6))
    for w in elements:
        pts = alcove_vertices(w)
        color = EXTREME_COLOR if w in extremes else INTERIOR_COLOR
        if m == 2:
            ax.fill(pts[:, 0], pts[:, 1], facecolor=color, edgecolor='white', linewidth=0.8)
            centre = pts.mean(axis=0)
            ax.text(centre[0], centre[1], str(length(w)), ha='center', va='center', fontsize=6)
        else:
            xs = np.sort(pts[:, 0])
            ax.plot(xs, [0, 0], color=color, linewidth=8, solid_capstyle='butt')
            ax.text(xs.mean(), 0.08, str(length(w)), ha='center', fontsize=7)
    base = alcove_vertices(AffineWeylElement(n, (0,) * m, tuple(range(m)), (1,) * m))
    if m == 2:
        closed = np.vstack([base, base[:1]])
        ax.plot(closed[:, 0], closed[:, 1], color=BASE_COLOR, linewidth=1.4)
        ax.set_aspect('equal')
    else:
        ax.plot(np.sort(base[:, 0]), [0, 0], color=BASE_COLOR, linewidth=2)
        ax.set_yticks([])
        ax.set_ylim(-0.3, 0.3)
    ax.grid(True, ls=':', alpha=0.4)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(target, format='svg', metadata={'Date': None})
    plt.close(fig)


def draw_alcoves(n, elements: Iterable[AffineWeylElement], extremes=(), title='', path=None) -> Path:
    path = Path(path or f'alcoves_n{n}.svg')
    path.parent.mkdir(parents=True, exist_ok=True)
    _render(n, elements, extremes, title, path)
    return path


def _admissible_figure(n, r, s, I):
    _check_rank(n)
    if I is None:
        elements = admissible_set(n, r, s)
        label = 'Iwahori'
    else:
        elements = admissible_set_for(n, r, s, I)
        label = 'I = {' + ','.join(map(str, sorted(I))) + '}'
    return elements, extreme_elements(n, r, s), f'Adm for n={n}, (r,s)=({r},{s}), {label}'


def emit_alcove_svg(n, r, s, I: Optional[Iterable] = None) -> str:
    """
    SVG document of Adm(μ_{r,s}) (or its parahoric version for I) as a
    string: base alcove outlined, extreme alcoves dark, the rest light.

    Raises:
    -------
    ValueError
        For n ≥ 6, where the alcoves no longer fit in the plane
    """
    buffer = io.StringIO()
    _render(n, *_admissible_figure(n, r, s, I), buffer)
    return buffer.getvalue()


def draw_admissible(n, r, s, I: Optional[Iterable] = None, path=None) -> Path:
    """Write emit_alcove_svg's figure to `path`."""
    return draw_alcoves(n, *_admissible_figure(n, r, s, I), path=path)


if __name__ == "__main__":
    print("Alcove Figure Test")
    print("=" * 60)
    out = draw_admissible(5, 3, 2, path=Path('output') / 'adm_n5_32.svg')
    print(f"✓ Wrote {out}")
    print("\n" + "=" * 60)
