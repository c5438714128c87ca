"""
Tests for the command-line surface and the verification report helpers.
"""

import sys
sys.path.append('.')

import json

from src import reports
from src.cli import EXIT_OK, EXIT_USAGE, main
from src.config import RunConfig
from src.exactalg import Budget, Ideal, RingSpec, contains, groebner_basis
from src.interchange import read_ideal


def _out(tmp_path):
    return ['--out', str(tmp_path)]


def _write(path, data):
    path.write_text(json.dumps(data), encoding='utf-8')
    return path


def _exhausting_check():
    spec = RingSpec(('x', 'y'))
    x, y = spec.gens
    groebner_basis(Ideal.of(spec, [x ** 2 - y, x * y - 1]), Budget(max_pairs=1, max_degree=1))
    return True, None, ''


def _failing_check():
    return False, 0, 'expected 1'


def test_admissible_command(tmp_path):
    assert main(['admissible', '3', '2', '1'] + _out(tmp_path)) == EXIT_OK
    path = tmp_path / 'admissible_n3_21.json'
    data = json.loads(path.read_text())
    assert data['count'] == 5
    assert data['histogram'] == {'2': 2, '1': 2, '0': 1}
    assert sum(1 for e in data['elements'] if e['extreme']) == 2
    first = path.read_bytes()
    assert main(['admissible', '3', '2', '1'] + _out(tmp_path)) == EXIT_OK
    assert path.read_bytes() == first
    print("✓ admissible writes a byte-stable listing")


def test_admissible_svg(tmp_path):
    assert main(['admissible', '3', '2', '1', '--svg'] + _out(tmp_path)) == EXIT_OK
    assert (tmp_path / 'admissible_n3_21.svg').exists()
    assert main(['svg', '7', '4', '3'] + _out(tmp_path)) == EXIT_USAGE
    print("✓ svg draws small ranks and refuses n=7")


def test_chart_command(tmp_path):
    assert main(['chart', 'Orth', '2', '2', '2', '--level', 'spin'] + _out(tmp_path)) == EXIT_OK
    path = tmp_path / 'chart_Orth_n2_22_spin.json'
    I = read_ideal(path)
    assert 'x2' in I.spec.names
    assert contains(I, I.spec.var('x2'))
    assert json.loads(path.read_text())['spec']['case'] == 'Orth'
    print("✓ chart writes a readable ideal")


def test_chart_from_spec_file(tmp_path):
    spec_file = _write(tmp_path / 'rank4.json', {'case': 'Orth', 'n': 2, 'r': 2, 's': 2, 'level': 'spin'})
    assert main(['chart', '--spec-file', str(spec_file)] + _out(tmp_path)) == EXIT_OK
    path = tmp_path / 'chart_Orth_n2_22_spin.json'
    from_file = path.read_bytes()
    assert main(['chart', 'Orth', '2', '2', '2', '--level', 'spin'] + _out(tmp_path)) == EXIT_OK
    assert path.read_bytes() == from_file
    assert main(['chart', 'Orth', '2', '2', '2', '--spec-file', str(spec_file)] + _out(tmp_path)) == EXIT_USAGE
    assert main(['chart'] + _out(tmp_path)) == EXIT_USAGE
    bad = _write(tmp_path / 'bad.json', {'case': 'B1', 'n': 4, 'r': 3})
    assert main(['chart', '--spec-file', str(bad)] + _out(tmp_path)) == EXIT_USAGE
    print("✓ chart reads a spec file")


def test_flatness_command(tmp_path):
    torsion = _write(tmp_path / 'torsion.json', {
        'field': {'Fp': 3}, 'vars': ['x', 'u'], 'order': 'grevlex', 'gens': [[['1', [1, 1]]]],
    })
    assert main(['flatness', str(torsion)] + _out(tmp_path)) == EXIT_OK
    verdict = json.loads((tmp_path / 'flatness_torsion.json').read_text())
    assert verdict['flat'] is False and verdict['witness'] == 'x'

    line = _write(tmp_path / 'line.json', {
        'field': 'Q', 'vars': ['x', 'u'], 'order': 'grevlex', 'gens': [[['1', [1, 0]]]],
    })
    assert main(['flatness', str(line)] + _out(tmp_path)) == EXIT_OK
    assert json.loads((tmp_path / 'flatness_line.json').read_text())['flat'] is True
    print("✓ flatness reports verdicts and witnesses")


def test_usage_errors(tmp_path):
    assert main(['verify', 'nonsense'] + _out(tmp_path)) == EXIT_USAGE
    assert main(['admissible', '3', '2', '1', '--prime', '4'] + _out(tmp_path)) == EXIT_USAGE
    assert main(['admissible', '3', '2', '1', '--prime', 'abc'] + _out(tmp_path)) == EXIT_USAGE
    assert main(['admissible', '3', '1', '2'] + _out(tmp_path)) == EXIT_USAGE
    assert main(['flatness', str(tmp_path / 'missing.json')] + _out(tmp_path)) == EXIT_USAGE
    assert main([]) == EXIT_USAGE
    print("✓ Bad input exits with code 3")


def test_claim_statuses():
    inconclusive = reports.run_claim(reports.ClaimTask('tiny', 'runs out of budget', _exhausting_check))
    assert inconclusive.status == reports.INCONCLUSIVE
    assert 'budget exhausted' in inconclusive.detail
    failed = reports.run_claim(reports.ClaimTask('fails', 'always fails', _failing_check))
    assert failed.status == reports.FAIL and failed.witness == '0'
    passed = reports.Claim('ok', 'always holds', reports.PASS)
    assert reports.exit_code([passed]) == 0
    assert reports.exit_code([passed, inconclusive]) == 2
    assert reports.exit_code([passed, inconclusive, failed]) == 1
    table = reports.suite_table([passed, failed])
    assert list(table.columns) == ['claim', 'reference', 'status', 'witness', 'detail']
    print("✓ Claim statuses and exit codes work")


def test_orthogonal_suite(tmp_path):
    config = RunConfig(output_dir=tmp_path)
    claims = reports.run_suite('orthogonal', config)
    assert len(claims) == 6
    assert all(c.status == reports.PASS for c in claims), [(c.claim, c.status) for c in claims]
    path = reports.write_bundle('orthogonal', config, claims)
    data = json.loads(path.read_text())
    assert data['summary'] == {'PASS': 6, 'FAIL': 0, 'INCONCLUSIVE': 0}
    assert data['exit_code'] == 0 and data['config']['prime'] == 3
    print("✓ Orthogonal suite passes")


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    print("=" * 80)
    print("TESTING COMMAND LINE AND REPORTS")
    print("=" * 80)
    tests = [
        test_admissible_command, test_admissible_svg, test_chart_command, test_chart_from_spec_file,
        test_flatness_command, test_usage_errors, test_claim_statuses, test_orthogonal_suite,
    ]
    failed = 0
    for test in tests:
        try:
            with tempfile.TemporaryDirectory() as tmp:
                if test is test_claim_statuses:
                    test()
                else:
                    test(Path(tmp))
        except AssertionError as e:
            failed += 1
            print(f"⚠️  {test.__name__} failed: {e}")
    print("=" * 80)
    print(f"✅ {len(tests) - failed}/{len(tests)} passed")
