import pytest

import colog

LEVELS = "atoms: A B C\nrank 0: 111 101\nrank 1: 110 100\nrank 2: 011 010\n"
STUDENT = "A => E\nS => A\nS => ~E\n"


def test_formula_round_trip():
    f = colog.Formula("B(A) & ~[]p")
    assert str(f) == str(colog.Formula(str(f)))
    assert f.atoms == {"A", "p"}
    assert not f.is_propositional


def test_model_queries():
    m = colog.Model(LEVELS)
    assert len(m) == 6
    assert m.atoms == ["A", "B", "C"]
    assert m.ranks == [0, 0, 1, 1, 2, 2]
    assert m.holds(colog.Formula("B(A) & B(C)"))
    assert not m.believes(colog.Formula("B"))
    assert m.only_knows(colog.Formula("A & C"))
    assert not m.is_co_star()


def test_lp_separation():
    co = colog.find_countermodel([], "<*>p", model_class="CO", atoms=1)
    assert not co.holds
    assert str(co.countermodel) == "atoms: p\nrank 0: 0\n"
    assert colog.find_countermodel([], "<*>p", model_class="CO*", atoms=2).holds


def test_student_defaults():
    assert colog.default_query(STUDENT, "S & A => ~E").holds
    refused = colog.default_query(STUDENT, "S & A => E")
    assert not refused.holds
    assert refused.countermodel.is_co_star()
    assert colog.epsilon_entails(STUDENT, "S & A => ~E")
    assert not colog.epsilon_entails(STUDENT, "S & A => E")


def test_rebuild_round_trip():
    m = colog.Model(LEVELS)
    assert colog.rebuild(m.ordering()) == m


def test_errors():
    with pytest.raises(colog.ParseError):
        colog.Formula("p &")
    with pytest.raises(colog.ParseError, match="line 2"):
        colog.Model("atoms: p\nrank x: 1\n")
    with pytest.raises(colog.UnknownAtomError):
        colog.Model(LEVELS).holds(colog.Formula("Z"))
    with pytest.raises(colog.Error):
        colog.find_countermodel([], "p", model_class="K")


def test_cli():
    code, out, _ = colog.run_cli(["valid", "--formula", "<*>p", "--class", "CO", "--atoms", "1"])
    assert code == 1
    assert out.endswith("atoms: p\nrank 0: 0\n")
