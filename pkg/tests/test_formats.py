import io
import random

import pytest
from hypothesis import given, settings, strategies as st

from alexkit.aribbon import ARibbonPresentation, SeifertBlocks, random_presentation
from alexkit.formats import (
    ParseError, dump, dumps, example_files, from_dict, load, load_example, loads,
)
from alexkit.modulecalc import ModulePresentation, from_seifert, mirror
from alexkit.seifert import SeifertPair

from oracles import random_seifert_pair


def test_shipped_examples_round_trip():
    files = example_files()
    assert {"unknot", "spun_trefoil", "spun_figure_eight", "spun_six_one", "aribbon_ball",
            "aribbon_torus_k2", "blocks_two_singularities"} <= set(files)
    for path in files.values():
        text = path.read_text()
        assert dumps(loads(text)) == text


def test_kinds():
    assert isinstance(load_example("spun_six_one"), SeifertPair)
    assert isinstance(load_example("aribbon_ball"), ARibbonPresentation)
    assert isinstance(load_example("blocks_two_singularities"), SeifertBlocks)
    with pytest.raises(ParseError):
        load_example("nothing")


@given(st.integers(0, 2**32), st.integers(0, 4), st.booleans(), st.booleans())
@settings(max_examples=60, deadline=None)
def test_presentation_round_trip(seed, n, stars, eta):
    rng = random.Random(seed)
    p = random_presentation(rng, n, star_range=(-3, 3) if stars else None)
    if eta:
        p = ARibbonPresentation(
            n, p.eps, p.pos_boundary, p.pos_interior, p.lk_matrix, p.star_plus, p.star_minus,
            tuple((rng.randint(-1, 2), rng.randint(-1, 2)) for _ in range(n)), name="random",
        )
    text = dumps(p)
    q = loads(text)
    assert q == p and q.name == p.name
    assert dumps(q) == text


def test_seifert_and_module_round_trip():
    rng = random.Random(3)
    for _ in range(30):
        s = random_seifert_pair(rng)
        assert loads(dumps(s)) == s
        m = mirror(from_seifert(s))
        assert loads(dumps(m)) == m
        assert dumps(loads(dumps(m))) == dumps(m)


def test_labels_and_names_survive():
    s = SeifertPair([[1]], [[0]], ["a"], ["A"], name='quote " and unicode é')
    t = loads(dumps(s))
    assert t.h1_labels == ("a",) and t.name == s.name


def test_strict_sign_fields():
    text = dumps(load_example("aribbon_torus_k2")).replace(
        "lk_matrix = [[0]]", "lk_matrix = [[0]]\nepsilon_y = [-1]"
    )
    p = loads(text)
    assert p.epsilon_y == (-1,)
    assert dumps(p) == text
    with pytest.raises(ParseError):
        loads(text.replace("epsilon_y = [-1]", "epsilon_y = [1]"))


@pytest.mark.parametrize(
    "text",
    [
        "kind = 'seifert'\nv_plus = [[1]]\n",
        "kind = 'seifert'\nv_plus = [[1]]\nv_minus = [[1, 2]]\n",
        "kind = 'seifert'\nv_plus = [[1.5]]\nv_minus = [[0]]\n",
        "kind = 'knot'\n",
        "v_plus = [[1]]\n",
        "kind = 'aribbon'\nn = 1\neps = [1]\nlk_matrix = [[0]]\n",
        "kind = 'aribbon'\nn = -1\n",
        "kind = 'module'\nmatrix = [['t +']]\n",
        "kind = 'module'\nmatrix = [['t', '1']]\n",
        "kind = = 1",
        "kind = 'aribbon'\nn = 1\neps = [1]\nlk_matrix = [[0]]\n"
        "[[interior_positions]]\ni = 0\nj = 0\nregion = 'ball'\nk = 2\n",
        "kind = 'aribbon'\nn = 1\neps = [1]\nlk_matrix = [[0]]\n"
        "[[interior_positions]]\ni = 0\nj = 0\nregion = 'disk'\n",
        "kind = 'aribbon'\nn = 1\neps = [1]\nlk_matrix = [[0]]\n"
        "[[interior_positions]]\ni = 0\nj = 0\nregion = 'ball'\n"
        "[[boundary_positions]]\ni = 0\nj = 0\nregion = 'ball'\n",
    ],
)
def test_rejects(text):
    with pytest.raises(ParseError):
        loads(text)


def test_default_k_and_from_dict():
    p = from_dict({
        "kind": "aribbon", "n": 1, "eps": [1], "lk_matrix": [[0]],
        "interior_positions": [{"i": 0, "j": 0, "region": "torus"}],
    })
    assert p.pos_interior[0][0].k == 1


def test_file_io(tmp_path, monkeypatch, capsys):
    s = load_example("spun_trefoil")
    path = tmp_path / "x.toml"
    dump(s, path)
    assert load(path) == s
    dump(s, "-")
    out = capsys.readouterr().out
    assert out == dumps(s)
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    assert load("-") == s
    with pytest.raises(ParseError):
        load(tmp_path / "missing.toml")
    with pytest.raises(TypeError):
        dumps(42)


def test_module_file():
    m = loads("kind = 'module'\nmatrix = [['2*t - 1', '0'], ['0', '2*t^-1 - 1']]\n")
    assert isinstance(m, ModulePresentation) and m.size == 2
    assert loads("kind = 'module'\nmatrix = []\n").size == 0
