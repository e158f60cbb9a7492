import os
from pathlib import Path

import pytest

import tightforge as tf

DATA = Path(os.environ.get("TIGHTFORGE_TEST_DATA", Path(__file__).resolve().parent.parent / "data"))


def read(name):
    return (DATA / name).read_text()


def test_chain_tight_order():
    c = tf.chain(3)
    assert c.tight_leq("2", "1")
    assert not c.leq("2", "1")


def test_diamond_spectrum_and_covers():
    d = tf.diamond()
    assert sorted(map(sorted, d.tight_spectrum())) == [["1", "e"], ["1", "f"]]
    assert d.is_cover(["e", "f"], "1")
    assert not d.is_cover(["e"], "1")


def test_semilattice_json_round_trip():
    s = tf.Semilattice.from_json(read("chain.json"))
    again = tf.Semilattice.from_json(s.to_json())
    assert again.names == s.names
    assert again.to_json() == s.to_json()


def test_i2_groupoid_and_envelope():
    i2 = tf.symmetric_inverse_monoid(2)
    assert i2.size == 7
    assert i2.groupoid_size() == (4, 2)
    env = i2.envelope()
    assert env.isomorphic(i2)
    assert i2.classify() == {"flat": True, "finite_joins": True, "distributive": True}
    assert "dir=both" in i2.groupoid_dot()


def test_partial_bijections_match_fixture():
    a = tf.InverseSemigroup.from_partial_bijections(2, [[2, 1], [1, 0]])
    b = tf.InverseSemigroup.from_json(read("i2.json"))
    assert a.isomorphic(b)


def test_consonance_verdicts():
    ok, _ = tf.consonant(tf.symmetric_inverse_monoid(2), tf.brandt(2))
    assert ok
    ok, reason = tf.consonant(tf.cyclic_with_zero(3), tf.cyclic_with_zero(2))
    assert not ok
    assert reason


def test_inclusion_report():
    r = tf.check_hom(read("inclusion.json"))
    assert r["tight"] and r["tightly_injective"]
    assert not r["tightly_surjective"]
    assert not r["dual_injective"]


def test_quotient_of_chain():
    s = tf.InverseSemigroup.from_json(read("chain.json"))
    assert s.quotient().size == 2


def test_space_duality():
    assert tf.space_duality(read("antichain.json"))["ok"]
    assert not tf.space_duality(read("two_chain_space.json"))["tight_like"]


def test_errors_are_typed():
    with pytest.raises(tf.InputError):
        tf.Semilattice.from_json(read("bad_reference.json"))
    with pytest.raises(tf.InvalidStructure):
        tf.InverseSemigroup.from_json(read("non_associative.json"))
    with pytest.raises(tf.InputError):
        tf.chain(3).tight_leq("2", "q")
    assert issubclass(tf.SizeCapExceeded, tf.Error)


def test_suite_is_deterministic():
    first = tf.run_suite(7)
    assert first == tf.run_suite(7)
    assert first.endswith("failed: 0\n")
