import json

import pytest

from polytrunc import catalog, write_canonical_text, write_planar_code
from polytrunc.cli import main


def records_of(output: str) -> list[dict]:
    lines = output.split("--- records ---\n", 1)[1].splitlines()
    return [json.loads(line) for line in lines if line]


@pytest.fixture
def tet_file(tmp_path):
    path = tmp_path / "tet.poly"
    path.write_text(write_canonical_text(catalog("tetrahedron")))
    return str(path)


@pytest.fixture
def prism_file(tmp_path):
    path = tmp_path / "prism.poly"
    path.write_text(write_canonical_text(catalog("triangular_prism")))
    return str(path)


@pytest.fixture
def cube_file(tmp_path):
    path = tmp_path / "cube.poly"
    path.write_text(write_canonical_text(catalog("cube")))
    return str(path)


class TestValidate:
    def test_good_file(self, tet_file, capsys):
        assert main(["validate", tet_file]) == 0
        out = capsys.readouterr().out
        assert "ok f=(4,6,4)" in out
        recs = records_of(out)
        assert recs[0]["schema"] == "polytrunc.report/1"
        assert recs[0]["ok"] is True

    def test_mixed_planar_code(self, tmp_path, capsys):
        data = write_planar_code([catalog("tetrahedron")])
        # append a record with a degree-2 vertex
        data += bytes([4, 2, 3, 0, 1, 3, 0, 1, 2, 4, 0, 3, 0])
        path = tmp_path / "mixed.plc"
        path.write_bytes(data)
        assert main(["validate", str(path)]) == 1
        out = capsys.readouterr().out
        assert "NotCubic" in out
        assert "1/2 records valid" in out

    def test_missing_file(self, capsys):
        assert main(["validate", "no_such_file.poly"]) == 1

    def test_malformed_text(self, tmp_path, capsys):
        path = tmp_path / "bad.poly"
        path.write_text("4\n1 2 3\n")
        assert main(["validate", str(path)]) == 1
        assert "ParseError" in capsys.readouterr().out


class TestPVector:
    def test_report(self, prism_file, capsys):
        assert main(["pvector", prism_file]) == 0
        out = capsys.readouterr().out
        assert "{3: 2, 4: 3}" in out and "star-identity ok" in out
        assert records_of(out)[0]["star_identity"] is True


class TestBelts:
    def test_prism(self, prism_file, capsys):
        assert main(["belts", prism_file]) == 0
        out = capsys.readouterr().out
        assert "1 three-belt(s)" in out
        assert "flag=False oracle=False" in out


class TestTruncate:
    def test_one_edge(self, tet_file, capsys, tmp_path):
        dest = tmp_path / "out.poly"
        assert main(["truncate", tet_file, "--edges", "0-1", "-o", str(dest)]) == 0
        out = capsys.readouterr().out
        assert "isomorphic to catalog triangular_prism" in out
        assert "predicted face sizes match" in out
        assert dest.exists()

    def test_all_edges(self, cube_file, capsys):
        assert main(["truncate", cube_file, "--all-edges"]) == 0
        out = capsys.readouterr().out
        assert "f=(32,48,18)" in out

    def test_valency_two_rejected(self, tet_file, capsys):
        assert main(["truncate", tet_file, "--edges", "0-1,0-2"]) == 1

    def test_unknown_edge(self, cube_file):
        assert main(["truncate", cube_file, "--edges", "0-2"]) == 1


class TestFlagcheck:
    def test_with_verify(self, prism_file, capsys):
        assert main(["flagcheck", prism_file, "--edges", "0-3", "--verify"]) == 0
        out = capsys.readouterr().out
        rec = records_of(out)[0]
        assert rec["criterion"] is True and rec["oracle"] is True

    def test_disagreement_exit_code(self, prism_file, capsys, monkeypatch):
        import polytrunc.cli as cli_mod
        monkeypatch.setattr(cli_mod, "is_flag_oracle", lambda p: False)
        assert main(["flagcheck", prism_file, "--edges", "0-3", "--verify"]) == 2


class TestFlagify:
    def test_cube(self, cube_file, capsys):
        assert main(["flagify", cube_file]) == 0
        out = capsys.readouterr().out
        rec = records_of(out)[0]
        assert rec["transform_matches"] is True and rec["flag"] is True
        assert rec["p_vector"] == {"4": 6, "6": 12}

    def test_triangles_rejected(self, tet_file, capsys):
        assert main(["flagify", tet_file]) == 1
        assert "triangular faces" in capsys.readouterr().err


class TestVerify:
    def test_exhaustive_tetrahedron(self, capsys):
        assert main(["verify", "--polytope", "tetrahedron", "--exhaustive"]) == 0
        out = capsys.readouterr().out
        assert "64 subgraphs examined" in out
        assert "14 admissible" in out
        assert "agreements 14 (100.0%)" in out
        recs = records_of(out)
        assert len(recs) == 14
        assert all(r["criterion"] == r["oracle"] for r in recs)

    def test_sampled_dodecahedron(self, capsys):
        assert main(["verify", "--polytope", "dodecahedron",
                     "--sample", "40", "--seed", "11"]) == 0
        out = capsys.readouterr().out
        assert "seed=11" in out
        assert len(records_of(out)) == 40

    def test_sample_requires_seed(self, capsys):
        assert main(["verify", "--polytope", "dodecahedron", "--sample", "5"]) == 1

    def test_large_host_requires_sampling(self, capsys):
        assert main(["verify", "--polytope", "dodecahedron"]) == 1
        assert main(["verify", "--polytope", "dodecahedron", "--exhaustive"]) == 1

    def test_file_host(self, cube_file, capsys):
        assert main(["verify", "--polytope", cube_file]) == 0

    def test_unknown_polytope(self, capsys):
        assert main(["verify", "--polytope", "icosahedron"]) == 1


class TestScan:
    def test_catalog_target(self, capsys):
        assert main(["scan", "--catalog", "--target", "5=12"]) == 0
        out = capsys.readouterr().out
        assert "match: dodecahedron" in out
        assert records_of(out)[0]["item"] == "dodecahedron"

    def test_unmatchable_target_notes_identity(self, capsys):
        assert main(["scan", "--catalog", "--target", "7=1"]) == 0
        out = capsys.readouterr().out
        assert "violates the face-count identity" in out
        assert "0 match(es)" in out

    def test_flagify_matches(self, capsys):
        assert main(["scan", "--catalog", "--target", "4=6", "--flagify"]) == 0
        out = capsys.readouterr().out
        assert "flag cut p-vector" in out

    def test_file_scan(self, cube_file, capsys):
        assert main(["scan", cube_file, "--target", "4=6"]) == 0
        assert "1 match(es)" in capsys.readouterr().out

    def test_p6_target_rejected(self, capsys):
        assert main(["scan", "--catalog", "--target", "6=2"]) == 1

    def test_needs_source(self, capsys):
        assert main(["scan", "--target", "4=6"]) == 1


class TestUsage:
    def test_no_command(self, capsys):
        assert main([]) == 1

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 1

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
