import json

import pytest

from semival.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_valuate(capsys):
    code, out, _ = run(capsys, "valuate", "--semiring", "nat",
                       "--valuation", "vp:5", "50")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "valuate", "--semiring", "nat",
                       "--valuation", "vp:5", "0")
    assert code == 0 and out.strip() == "inf"


def test_valuate_json_fields(capsys):
    code, out, _ = run(capsys, "valuate", "--semiring", "qnn",
                       "--valuation", "vp:5", "--output", "json", "50/3")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "valuate"
    assert payload["instance"] == "qnn"
    assert payload["valuation"] == "vp:5"
    assert payload["result"] == "2"
    assert set(payload["bound"]) == {"seed", "samples", "size_bound"}
    assert "elapsed_ms" in payload


def test_check_holds_and_counterexample_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "--semiring", "qnn", "--valuation",
                       "vp:5", "--property", "min-property", "--samples", "400")
    assert code == 0
    code, out, _ = run(capsys, "check", "--semiring", "fractions(poly(nat))",
                       "--valuation", "deg-frac", "--property", "min-property",
                       "--samples", "400")
    assert code == 1
    assert "(1)/(1)" in out and "(X)/(1)" in out


def test_check_gaussian(capsys):
    code, _, _ = run(capsys, "check", "--semiring", "qnn", "--valuation",
                     "vp:5", "--property", "gaussian", "--samples", "150")
    assert code == 0
    code, _, _ = run(capsys, "check", "--semiring", "fractions(poly(nat))",
                     "--valuation", "deg-frac", "--property", "gaussian",
                     "--samples", "150")
    assert code == 1


def test_check_axioms_with_and_without_valuation(capsys):
    code, _, _ = run(capsys, "check", "--semiring", "tropical-int",
                     "--property", "axioms", "--samples", "300")
    assert code == 0
    code, _, _ = run(capsys, "check", "--semiring", "tropical-int",
                     "--valuation", "tropical-id", "--property", "axioms",
                     "--samples", "300")
    assert code == 0
    code, _, _ = run(capsys, "check", "--semiring", "nat", "--valuation",
                     "vp:5", "--property", "extension-axioms", "--samples", "300")
    assert code == 0
    code, _, _ = run(capsys, "check", "--semiring", "poly(nat)", "--valuation",
                     "low-order", "--property", "extension-axioms",
                     "--samples", "300")
    assert code == 0


def test_check_mc_and_entire(capsys):
    code, _, _ = run(capsys, "check", "--semiring", "fuzzy", "--property",
                     "mc", "--samples", "400")
    assert code == 1
    code, _, _ = run(capsys, "check", "--semiring", "fuzzy", "--property",
                     "entire", "--samples", "400")
    assert code == 0
    code, _, _ = run(capsys, "check", "--semiring", "qnn", "--valuation",
                     "vp:5", "--property", "subtractive", "--samples", "400")
    assert code == 0
    code, _, _ = run(capsys, "check", "--semiring", "qnn", "--valuation",
                     "vp:5", "--property", "prime", "--samples", "400")
    assert code == 0


def test_check_units_zeroset_gap(capsys):
    code, out, _ = run(capsys, "check", "--semiring", "laurent(nat)",
                       "--valuation", "low-order", "--property", "units-zeroset",
                       "--samples", "400")
    assert code == 1
    assert "1 + X" in out


def test_check_total_order(capsys):
    code, _, _ = run(capsys, "check", "--semiring", "qnn", "--valuation",
                     "vp:5", "--property", "total-order", "--samples", "100")
    assert code == 0
    code, out, _ = run(capsys, "check", "--semiring", "bool-poly",
                       "--property", "total-order", "--samples", "100")
    assert code == 1


def test_factor_and_divmod(capsys):
    code, out, _ = run(capsys, "factor", "--semiring", "qnn", "--valuation",
                       "vp:5", "50/3")
    assert code == 0 and "unit = 2/3" in out and "exponent = 2" in out
    code, out, _ = run(capsys, "divmod", "--semiring", "qnn", "--valuation",
                       "vp:5", "10/3", "2/7")
    assert code == 0 and "q = 35/3" in out and "r = 0" in out


def test_ideal_subcommands(capsys):
    code, out, _ = run(capsys, "ideal", "--semiring", "ideals-z", "--op", "sum",
                       "ideal[4]", "ideal[6]")
    assert code == 0 and "ideal[2]" in out
    code, out, _ = run(capsys, "ideal", "--semiring", "nat", "--op", "contains",
                       "ideal[2,3]", "5")
    assert code == 0
    code, out, _ = run(capsys, "ideal", "--semiring", "nat", "--op", "contains",
                       "ideal[2,3]", "1")
    assert code == 1
    code, out, _ = run(capsys, "ideal", "--semiring", "bool-poly", "--op",
                       "comparable", "ideal[X]", "ideal[X+1]")
    assert code == 1
    code, out, _ = run(capsys, "ideal", "--semiring", "fuzzy", "--op",
                       "comparable", "fuzzy[0,1/2]", "fuzzy[0,1/2)")
    assert code == 0
    code, out, _ = run(capsys, "ideal", "--semiring", "fuzzy", "--op",
                       "subtractive", "fuzzy[0,1/2]", "--samples", "200")
    assert code == 0


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "valuate", "--semiring", "nope", "--valuation",
               "vp:5", "1")[0] == 2
    assert run(capsys, "valuate", "--semiring", "nat", "--valuation",
               "vp:6", "1")[0] == 2
    assert run(capsys, "valuate", "--semiring", "nat", "--valuation",
               "vp:5", "X^")[0] == 2
    assert run(capsys, "valuate", "--semiring", "poly(nat)", "--valuation",
               "low-order", "X^-1")[0] == 2
    assert run(capsys, "check", "--semiring", "nat", "--property",
               "min-property")[0] == 2
    # argparse rejects unknown property names before any computation
    with pytest.raises(SystemExit):
        import semival.cli as cli
        cli.build_parser().parse_args(["check", "--semiring", "nat",
                                       "--property", "bogus"])


def test_json_reports_are_deterministic(capsys):
    argv = ["check", "--semiring", "qnn", "--valuation", "vp:5", "--property",
            "min-property", "--samples", "300", "--seed", "9", "--output", "json"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    a, b = json.loads(out1), json.loads(out2)
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert a == b


def test_witnesses_reverify_from_json(capsys):
    code, out, _ = run(capsys, "check", "--semiring", "fractions(poly(nat))",
                       "--valuation", "deg-frac", "--property", "min-property",
                       "--samples", "300", "--output", "json")
    assert code == 1
    payload = json.loads(out)
    from semival.grammar import parse_element
    from semival.instances import get_instance
    from semival.valuation import get_valuation, valuate
    frs = get_instance("fractions(poly(nat))")
    v = get_valuation("deg-frac", frs)
    x, y = (parse_element(w, frs) for w in payload["witness"])
    vx, vy = valuate(v, x), valuate(v, y)
    assert vx != vy
    assert valuate(v, frs.add(x, y)) != min(vx, vy)
