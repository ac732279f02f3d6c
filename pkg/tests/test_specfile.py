from pathlib import Path

import pytest

from frobenius_forge import InputError, multiplicity_matrix, parse_spec, parse_spec_text

SPECS = Path(__file__).resolve().parent.parent / "specs"


@pytest.mark.parametrize("path", sorted(SPECS.glob("*.spec")), ids=lambda p: p.stem)
def test_shipped_specs_parse(path):
    spec = parse_spec(path)
    assert spec.kind in ("diagonal", "group", "extension", "operator")
    assert len(spec.digest) == 64


def test_quadric_spec_contents():
    spec = parse_spec(SPECS / "quadric_cone.spec")
    assert spec.kind == "diagonal"
    assert spec.weights.prime == 3
    assert multiplicity_matrix(spec.weights).entries == ((5, 4), (4, 5))
    assert spec.witness_c == (2, 0)


def test_digest_ignores_comments_and_spacing():
    a = parse_spec_text("[grading]\ntorsion_orders = 2\n[weights]\nprime = 3\nx = | 1\ny = | 1\n")
    b = parse_spec_text("# comment\n[grading]\n  torsion_orders   =  2   # two\n\n[weights]\nprime=3\nx = |  1\ny = | 1\n")
    c = parse_spec_text("[grading]\ntorsion_orders = 2\n[weights]\nprime = 5\nx = | 1\ny = | 1\n")
    assert a.digest == b.digest != c.digest


@pytest.mark.parametrize("text,line,fragment", [
    ("", None, "empty"),
    ("# only a comment\n", None, "empty"),
    ("[grading]\ntorsion_orders = 2\n[weights]\nprime = 2\nx = | 1\n", 4, "coprime"),
    ("[grading]\nfree_rank = 1\n[weights]\nprime = 2\nx = 1 2\n", 5, "needs 1 free"),
    ("[grading]\nfree_rank = one\n[weights]\nprime = 3\nx = 1\n", 2, "integers"),
    ("[bogus]\n", 1, "unknown section"),
    ("prime = 3\n", 1, "outside"),
    ("[weights]\nprime = 3\nx = 1\n", 1, "[grading]"),
    ("[grading]\nfree_rank = 1\n[weights]\nprime = 4\nx = 1\n", 4, "not prime"),
    ("[group]\nprime = 5\nmodulus = 2\nclass_sizes = 1 1\nclass.1 = 0\nclass.2 = 1\nchar.a = 1 ; 1\nchar.b = 1\n",
     8, "needs 2 values"),
    ("[group]\nprime = 2\nmodulus = 2\nclass_sizes = 1 1\nclass.1 = 0\nclass.2 = 1\nchar.a = 1 ; 1\nchar.b = 1 ; -1\n",
     2, "divides"),
    ("[extension]\nvariables = x\ncharacteristic = 0\nbasis_size = 2\nmul.2.2 = x\n", 5, "needs 2 coefficients"),
    ("[operator]\nnvars = 1\ncharacteristic = 2\nwindow = 8\nterm = 1 | 0\n", 5, "term expects"),
])
def test_errors_are_located(text, line, fragment, tmp_path):
    f = tmp_path / "bad.spec"
    f.write_text(text)
    with pytest.raises(InputError) as info:
        parse_spec(f)
    msg = str(info.value)
    assert fragment in msg
    if line is not None:
        assert f"bad.spec:{line}:" in msg


def test_missing_file(tmp_path):
    with pytest.raises(InputError, match="cannot read"):
        parse_spec(tmp_path / "nope.spec")


def test_group_and_operator_sections():
    g = parse_spec(SPECS / "cyclic3.spec")
    assert list(g.action.table.names) == ["U0", "U1", "U2"]
    op = parse_spec(SPECS / "hasse.spec").operator
    assert op.char == 2 and op.nvars == 2
    ext = parse_spec(SPECS / "sqrt_x.spec").extension
    assert ext.basis_size == 2
