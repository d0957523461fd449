import pytest

from calculator import Calculator, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--block", "vv^^")
    assert code == 0
    assert out.splitlines() == ["vv^^", "v^v^", "^vv^", "v^^v", "^v^v", "^^vv"]


def test_multiply(capsys):
    code, out, _ = run(capsys, "multiply", "--block", "^v", "--x", "(1,2)|^v|", "--y", "|^v|(1,2)")
    assert (code, out) == (0, "+1·((1,2)|^v|(1,2))\n")
    code, out, _ = run(capsys, "multiply", "--block", "^v", "--x", "|^v|(1,2)", "--y", "(1,2)|^v|",
                       "--route", "closure")
    assert (code, out) == (0, "0\n")


def test_basis_lists_degrees(capsys):
    code, out, _ = run(capsys, "basis", "--block", "^v", "--kind", "H")
    assert code == 0
    assert out == "(1,2)|v^|(1,2)\t0\n(1,2)|^v|(1,2)\t2\n"


def test_matrices(capsys, tmp_path):
    code, out, _ = run(capsys, "decomp", "--block", "v^")
    assert (code, out) == (0, ",v^,^v\nv^,1,q\n^v,0,1\n")
    target = tmp_path / "cartan.csv"
    code, out, _ = run(capsys, "cartan", "--block", "v^", "--out", str(target))
    assert (code, out) == (0, "")
    assert target.read_text(encoding="utf-8") == ",v^,^v\nv^,1+q^2,q\n^v,q,1\n"


def test_module_commands(capsys):
    code, out, _ = run(capsys, "cellmod", "--mu", "^v")
    assert code == 0
    assert out.splitlines()[0] == "V(^v): 1+q"
    assert out.splitlines()[-1] == "V(^v): ^v<0>, v^<1>"
    code, out, _ = run(capsys, "filtration", "--lam", "v^")
    assert out == "dim P(v^) = 1+q+q^2\nP(v^): ^v<1>, v^<0>\n"


def test_render(capsys):
    code, out, _ = run(capsys, "render", "--diagram", "(1,2)|^v|")
    assert (code, out) == (0, "(1,2)|^v|\n│   │\n^   v\n╰───╯\n")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "counts", "--suite", "oracle", "--max-vertices", "2",
                       "--seed", "3")
    assert code == 0
    assert out.startswith("seed: 3\nmax vertices: 2\n")
    assert out.endswith("result: PASS\n")


def test_output_is_deterministic(capsys):
    first = run(capsys, "multiply", "--block", "vv^^", "--x", "(1,4);(2,3)|v^v^|(1,2);(3,4)",
                "--y", "(1,2);(3,4)|v^v^|(1,4);(2,3)")
    second = run(capsys, "multiply", "--block", "vv^^", "--x", "(1,4);(2,3)|v^v^|(1,2);(3,4)",
                 "--y", "(1,2);(3,4)|v^v^|(1,4);(2,3)")
    assert first == second
    assert first[1] == "+1·((1,4);(2,3)|v^v^|(1,4);(2,3)) +1·((1,4);(2,3)|^v^v|(1,4);(2,3))\n"


@pytest.mark.parametrize("argv", [
    ["enumerate", "--block", "v?"],
    ["multiply", "--block", "v^", "--x", "(1,2)|vv|", "--y", "|^v|"],
    ["multiply", "--block", "vv^^", "--x", "|^v|", "--y", "|^v|"],
    ["verify", "--suite", "nope"],
])
def test_errors_exit_with_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("Error: ")


def test_usage_errors_exit_with_two():
    with pytest.raises(SystemExit) as exc:
        main(["multiply", "--block", "v^"])
    assert exc.value.code == 2


def test_facade():
    calc = Calculator()
    assert [str(w) for w in calc.enumerate("^v")] == ["v^", "^v"]
    assert calc.render(element="0") == "0\n"
