"""
End-to-end tests for the command-line interface
"""

import json
import pytest
import sys
from pathlib import Path

ROOT = Path(__file__).parent.parent.parent
sys.path.insert(0, str(ROOT))
sys.path.insert(0, str(ROOT / 'src'))

import cli
from antimagic_config import EXIT_BAD_INPUT, EXIT_OK, EXIT_UNSUPPORTED, EXIT_VERIFICATION_FAILED
from antimagic_formats import read_graph


class Workspace:
    """Temporary directory that generates graph files through the CLI"""

    def __init__(self, root: Path):
        self.root = root

    def __truediv__(self, name: str) -> Path:
        return self.root / name

    def gen(self, name: str, *params: str) -> Path:
        path = self.root / f"{name}.graph"
        assert cli.main(['gen', *params, '-o', str(path)]) == EXIT_OK
        return path


@pytest.fixture
def workdir(tmp_path):
    return Workspace(tmp_path)


class TestGen:
    """Generator command"""

    def test_cycle(self, workdir):
        path = workdir.gen('c7', 'cycle', '7')
        assert path.read_text().startswith("p 7 7\n")

    def test_random_regular_is_deterministic(self, workdir):
        a = workdir.gen('a', 'random-regular', '10', '3', '--seed', '7')
        b = workdir.gen('b', 'random-regular', '10', '3', '--seed', '7')
        assert a.read_bytes() == b.read_bytes()
        assert read_graph(a).regular_degree() == 3

    def test_disjoint_union_of_files(self, workdir):
        k4 = workdir.gen('k4', 'complete', '4')
        path = workdir.gen('two', 'disjoint-union', str(k4), str(k4))
        assert read_graph(path).n == 8

    def test_infeasible_parameters(self, tmp_path):
        assert cli.main(['gen', 'cycle', '2', '-o', str(tmp_path / 'x')]) == EXIT_BAD_INPUT
        assert cli.main(['gen', 'random-regular', '5', '3']) == EXIT_BAD_INPUT

    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(['gen', 'cycle', '5', '--colour'])
        assert exc.value.code == EXIT_BAD_INPUT


class TestProductAndLabel:
    """product, label and verify working together"""

    def test_product_files(self, workdir):
        k2 = workdir.gen('k2', 'complete', '2')
        out = workdir / 'c4.graph'
        assert cli.main(['product', str(k2), str(k2), '-o', str(out)]) == EXIT_OK
        assert read_graph(out).m == 4
        assert (workdir / 'c4.graph.prov').exists()

    def test_product_malformed(self, workdir):
        bad = workdir / 'bad.graph'
        bad.write_text("p 3 1\ne 0\n")
        assert cli.main(['product', str(bad), str(bad), '-o', str(workdir / 'x')]) == EXIT_BAD_INPUT

    def test_approx_magic(self, workdir, capsys):
        k4 = workdir.gen('k4', 'complete', '4')
        capsys.readouterr()
        assert cli.main(['label', '--mode', 'approx-magic', str(k4)]) == EXIT_OK
        captured = capsys.readouterr()
        assert len(captured.out.splitlines()) == 6
        assert "(bound 5)" in captured.err

    def test_product_pipeline(self, workdir, capsys):
        k4 = workdir.gen('k4', 'complete', '4')
        k2 = workdir.gen('k2', 'complete', '2')
        out = workdir / 'k4k2.lab'
        assert cli.main(['label', '--mode', 'antimagic-product', str(k4), str(k2), '-o', str(out)]) == EXIT_OK
        capsys.readouterr()

        code = cli.main(['verify', str(workdir / 'k4k2.lab.graph'), str(out),
                         '--provenance', str(workdir / 'k4k2.lab.prov'), '--format', 'json'])
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report['bijection'] and report['antimagic']
        assert report['chain_ok'] is True

    def test_swapped_factors_verify_with_provenance(self, workdir, capsys):
        k2 = workdir.gen('k2', 'complete', '2')
        k4 = workdir.gen('k4', 'complete', '4')
        out = workdir / 'k2k4.lab'
        assert cli.main(['label', '--mode', 'antimagic-product', str(k2), str(k4), '-o', str(out)]) == EXIT_OK
        assert (workdir / 'k2k4.lab.prov').exists()
        capsys.readouterr()

        code = cli.main(['verify', str(workdir / 'k2k4.lab.graph'), str(out),
                         '--provenance', str(workdir / 'k2k4.lab.prov'), '--format', 'json'])
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report['antimagic'] is True
        assert report['chain_ok'] is True

    def test_block_labeling_skips_provenance(self, workdir, capsys):
        k4 = workdir.gen('k4', 'complete', '4')
        k2 = workdir.gen('k2', 'complete', '2')
        two_k4 = workdir.gen('two_k4', 'disjoint-union', str(k4), str(k4))
        out = workdir / 'blocks.lab'
        assert cli.main(['label', '--mode', 'antimagic-product', str(two_k4), str(k2), '-o', str(out)]) == EXIT_OK
        assert (workdir / 'blocks.lab.graph').exists()
        assert not (workdir / 'blocks.lab.prov').exists()
        assert "not written" in capsys.readouterr().out
        assert cli.main(['verify', str(workdir / 'blocks.lab.graph'), str(out)]) == EXIT_OK

    def test_toroidal_unsupported(self, workdir, capsys):
        c25 = workdir.gen('c25', 'cycle', '25')
        capsys.readouterr()
        code = cli.main(['label', '--mode', 'antimagic-product', str(c25), str(c25)])
        assert code == EXIT_UNSUPPORTED
        assert "toroidal" in capsys.readouterr().err

    def test_brute_force_k2(self, workdir):
        k2 = workdir.gen('k2', 'complete', '2')
        assert cli.main(['label', '--mode', 'brute', str(k2)]) == EXIT_VERIFICATION_FAILED

    def test_label_is_deterministic(self, workdir):
        g = workdir.gen('r', 'random-regular', '12', '3', '--seed', '3')
        a, b = workdir / 'a.lab', workdir / 'b.lab'
        assert cli.main(['label', str(g), '-o', str(a)]) == EXIT_OK
        assert cli.main(['label', str(g), '-o', str(b)]) == EXIT_OK
        assert a.read_bytes() == b.read_bytes()


class TestVerify:
    """verify exit codes"""

    def test_duplicated_label(self, workdir):
        c3 = workdir.gen('c3', 'cycle', '3')
        lab = workdir / 'c3.lab'
        lab.write_text("0 1 1\n1 2 1\n2 0 3\n")
        assert cli.main(['verify', str(c3), str(lab)]) == EXIT_VERIFICATION_FAILED

    def test_k2_reported_not_antimagic(self, workdir, capsys):
        k2 = workdir.gen('k2', 'complete', '2')
        lab = workdir / 'k2.lab'
        lab.write_text("0 1 1\n")
        capsys.readouterr()
        assert cli.main(['verify', str(k2), str(lab)]) == EXIT_OK
        assert "antimagic: no" in capsys.readouterr().out

    def test_missing_file(self, workdir):
        c3 = workdir.gen('c3', 'cycle', '3')
        assert cli.main(['verify', str(c3), str(workdir / 'nope.lab')]) == EXIT_BAD_INPUT


class TestExportAndDebug:
    """export-dot, decompose and experiment"""

    def test_dot_with_labels(self, workdir, capsys):
        c5 = workdir.gen('c5', 'cycle', '5')
        lab = workdir / 'c5.lab'
        assert cli.main(['label', str(c5), '-o', str(lab)]) == EXIT_OK
        capsys.readouterr()
        assert cli.main(['export-dot', str(c5), str(lab)]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.count('label="') == 10

    def test_dot_without_labels(self, workdir, capsys):
        c5 = workdir.gen('c5', 'cycle', '5')
        capsys.readouterr()
        assert cli.main(['export-dot', str(c5)]) == EXIT_OK
        assert "label" not in capsys.readouterr().out

    def test_dot_bad_path(self, tmp_path):
        assert cli.main(['export-dot', str(tmp_path / 'missing.graph')]) == EXIT_BAD_INPUT

    def test_decompose_k4(self, workdir, capsys):
        k4 = workdir.gen('k4', 'complete', '4')
        capsys.readouterr()
        assert cli.main(['decompose', str(k4)]) == EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == 2

    def test_experiment_json(self, capsys):
        assert cli.main(['experiment', '2', '--format', 'json']) == EXIT_OK
        rows = json.loads(capsys.readouterr().out)
        assert [r['triangles'] for r in rows] == [1, 2]
