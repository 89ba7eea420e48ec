from __future__ import annotations

import json
import random

import pytest

from reescert.errors import FamilyError
from reescert.family import (
    GenRef,
    build_family,
    characterize,
    comparable,
    family_from_file,
    is_closed_under_comparability,
    rewrite_images,
)
from reescert.monomials import parse_monomial

from bruteforce import rand_rees_family
from conftest import family_dict


# ----------------------------------------------------------- construction

def test_tower4_shape(tower4):
    assert tower4.mode == "rees"
    assert tower4.n == 4
    assert tower4.level_indices() == (0, 1, 2, 3, 4)
    assert [len(lv) for lv in tower4.levels] == [4, 9, 7, 3, 1]
    assert len(tower4) == 24
    assert tower4.top_level == 4
    assert [lv.degree for lv in tower4.levels] == [1, 2, 3, 3, 5]
    assert tower4.generator(GenRef(0, 2)) == parse_monomial("x2", 4)
    assert tower4.generator(GenRef(1, 3)) == parse_monomial("x2^2", 4)
    assert tower4.position(1, parse_monomial("x1*x2", 4)) == 2
    assert tower4.position(1, parse_monomial("x4^2", 4)) is None


def test_level_zero_always_injected(maxpowers3):
    # the description's first level repeats the variables; both survive
    assert [len(lv) for lv in maxpowers3.levels] == [3, 3, 6, 10]
    assert maxpowers3.level(0).generators == maxpowers3.level(1).generators
    assert len(maxpowers3) == 22


def test_fiber_shape(fiber_pair):
    assert fiber_pair.mode == "fiber"
    assert fiber_pair.level_indices() == (1, 2)
    assert fiber_pair.embedding_degree == 4
    assert [g.text() for g in fiber_pair.level(1).generators] == [
        "x3^2", "x3*x4", "x3*x5", "x4*x5"]


def test_explicit_lists_are_revlex_sorted():
    fam = build_family({
        "mode": "rees", "variables": 3,
        "levels": [{"degree": 2,
                    "generators": ["x1*x3", "x1^2", "x2^2", "x1*x2"]}]})
    assert [g.text() for g in fam.level(1).generators] == [
        "x1^2", "x1*x2", "x2^2", "x1*x3"]


def test_duplicate_generators_warn_and_dedupe():
    with pytest.warns(UserWarning, match="duplicate"):
        fam = build_family({
            "mode": "rees", "variables": 2,
            "levels": [{"degree": 1, "generators": ["x1", "x1", "x2"]}]})
    assert len(fam.level(1)) == 2


def test_empty_levels_ok_in_rees():
    fam = build_family({"mode": "rees", "variables": 3, "levels": []})
    assert fam.level_indices() == (0,)
    assert len(fam) == 3


@pytest.mark.parametrize("mutate, message", [
    (lambda d: d.update(mode="weird"), "mode"),
    (lambda d: d.update(variables=0), "variables"),
    (lambda d: d.update(variables="4"), "variables"),
    (lambda d: d.update(extra=1), "unknown"),
    (lambda d: d.update(embedding_degree=9), "fiber"),
    (lambda d: d["levels"].append({"degree": 2, "borel": "x3*x4"}),
     "non-decreasing"),
    (lambda d: d["levels"].__setitem__(0, {"degree": 3, "borel": "x3*x4"}),
     "degree"),
    (lambda d: d["levels"].__setitem__(
        0, {"degree": 2, "borel": "x3*x4", "generators": ["x1^2"]}),
     "exactly one"),
    (lambda d: d["levels"].__setitem__(0, {"degree": 2}), "exactly one"),
    (lambda d: d["levels"].__setitem__(0, {"degree": 2, "generators": []}),
     "non-empty"),
    (lambda d: d["levels"].__setitem__(0, {"degree": 0, "borel": "1"}),
     "positive"),
])
def test_rees_validation_errors(mutate, message):
    data = family_dict("tower4")
    mutate(data)
    with pytest.raises(FamilyError, match=message):
        build_family(data)


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("embedding_degree"),
    lambda d: d.update(embedding_degree=3),
    lambda d: d.update(levels=[]),
])
def test_fiber_validation_errors(mutate):
    data = family_dict("fiber_pair")
    mutate(data)
    with pytest.raises(FamilyError):
        build_family(data)


def test_family_from_file(tmp_path):
    path = tmp_path / "fam.json"
    path.write_text(json.dumps(family_dict("tower4")))
    fam = family_from_file(path)
    assert len(fam) == 24
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(FamilyError, match="JSON"):
        family_from_file(bad)


# ---------------------------------------------------------- comparability

def test_comparable_frozen_pairs(tower4):
    assert not comparable(tower4, GenRef(1, 3), GenRef(1, 4))
    assert rewrite_images(tower4, GenRef(1, 3), GenRef(1, 4)) == (
        parse_monomial("x1*x2", 4), parse_monomial("x2*x3", 4))
    assert comparable(tower4, GenRef(0, 2), GenRef(3, 1))
    assert not comparable(tower4, GenRef(0, 1), GenRef(2, 7))
    assert rewrite_images(tower4, GenRef(0, 1), GenRef(2, 7)) == (
        parse_monomial("x3", 4), parse_monomial("x1*x2^2", 4))
    # identical monomials on different levels order to themselves
    assert comparable(tower4, GenRef(2, 1), GenRef(3, 1))


def test_comparable_argument_checks(tower4):
    with pytest.raises(ValueError):
        comparable(tower4, GenRef(1, 4), GenRef(1, 3))
    with pytest.raises(ValueError):
        comparable(tower4, GenRef(1, 3), GenRef(1, 3))
    with pytest.raises(ValueError):
        comparable(tower4, GenRef(1, 10), GenRef(2, 1))
    with pytest.raises(ValueError):
        comparable(tower4, GenRef(5, 1), GenRef(5, 2))


# ---------------------------------------------------------------- closure

def test_tower4_closed(tower4):
    report = is_closed_under_comparability(tower4)
    assert report.closed
    assert report.witnesses == ()
    assert report.pairs_checked == 24 * 23 // 2
    assert not report.truncated


def test_maxpowers3_closed(maxpowers3):
    assert is_closed_under_comparability(maxpowers3).closed


def test_fiber_pair_closed(fiber_pair):
    assert is_closed_under_comparability(fiber_pair).closed


def test_missing_generator_yields_witnesses():
    data = family_dict("tower4")
    # drop x1*x2 from level 1, keep the rest explicit
    gens = ["x1^2", "x2^2", "x1*x3", "x2*x3", "x3^2",
            "x1*x4", "x2*x4", "x3*x4"]
    data["levels"][0] = {"degree": 2, "generators": gens}
    fam = build_family(data)
    report = is_closed_under_comparability(fam, all_witnesses=True)
    assert not report.closed
    images = {img.text() for w in report.witnesses for k in w.missing
              for img in (w.images[k],)}
    assert images == {"x1*x2"}
    # sort(x1^2, x2^2) = (x1*x2, x1*x2): both images missing
    both = [w for w in report.witnesses if w.missing == (0, 1)]
    assert any(w.images[0].text() == "x1*x2" for w in both)

    capped = is_closed_under_comparability(fam, max_witnesses=1)
    assert not capped.closed
    assert len(capped.witnesses) == 1
    assert capped.truncated
    assert capped.witnesses[0] == report.witnesses[0]


# ----------------------------------------------------- characterization

def test_characterize_tower4(tower4):
    ch = characterize(tower4)
    assert ch.level_indices == (1, 2, 3, 4)
    assert ch.borel_equal == (True, True, True, True)
    assert ch.borel_subset == (True, True, True, True)
    assert ch.chain == (True, True, True)
    assert ch.conjunction


def test_characterize_fiber_pair(fiber_pair):
    ch = characterize(fiber_pair)
    assert ch.borel_equal == (False, False)
    assert ch.borel_subset == (True, True)
    assert ch.chain == (True,)
    assert not ch.conjunction
    # closed anyway: sufficiency without necessity in fiber mode
    assert is_closed_under_comparability(fiber_pair).closed


def test_conjunction_matches_closure_on_random_families():
    rng = random.Random(20260822)
    for _ in range(60):
        fam = build_family(rand_rees_family(rng))
        ch = characterize(fam)
        closed = is_closed_under_comparability(fam).closed
        assert ch.conjunction == closed


def test_deleting_inner_generator_breaks_closure():
    rng = random.Random(31)
    tried = 0
    while tried < 20:
        data = rand_rees_family(rng)
        fam = build_family(data)
        if not is_closed_under_comparability(fam).closed:
            continue
        target = None
        for pos, lv in enumerate(fam.levels):
            if lv.index > 0 and len(lv) > 1:
                target = (pos, lv)
                break
        if target is None:
            continue
        tried += 1
        pos, lv = target
        keep = rng.randrange(len(lv) - 1)  # never the last generator
        gens = [g.text() for j, g in enumerate(lv.generators) if j != keep]
        data["levels"][pos - 1] = {"degree": lv.degree, "generators": gens}
        broken = build_family(data)
        assert not is_closed_under_comparability(broken).closed
