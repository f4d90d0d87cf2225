import pytest

from deskrisk import GeneratorSpec, generate, save_instance, validate


def test_generated_instances_are_valid():
    inst = generate(GeneratorSpec(n=99, m=20, authors_min=3, authors_max=8, seed=7))
    assert inst.n == 99
    assert validate(inst) == []
    assert all(3 <= len(row) <= 8 for row in inst.rows)


def test_minimal_spec():
    inst = generate(GeneratorSpec(n=1, m=1, authors_min=1, authors_max=1, seed=0))
    assert inst.rows == ((1,),)


def test_same_seed_gives_byte_identical_json(tmp_path):
    spec = GeneratorSpec(n=30, m=10, authors_min=1, authors_max=4, seed=123)
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    save_instance(generate(spec), first)
    save_instance(generate(spec), second)
    assert first.read_bytes() == second.read_bytes()


def test_different_seeds_give_different_instances():
    spec = GeneratorSpec(n=30, m=10, authors_min=1, authors_max=4, seed=1)
    other = GeneratorSpec(n=30, m=10, authors_min=1, authors_max=4, seed=2)
    assert generate(spec) != generate(other)


def test_probability_range_is_respected():
    inst = generate(
        GeneratorSpec(n=10, m=10, authors_min=1, authors_max=2, p_low=0.2, p_high=0.4, seed=5)
    )
    assert all(0.2 <= pj <= 0.4 for pj in inst.p)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n": 0, "m": 1, "authors_min": 1, "authors_max": 1},
        {"n": 1, "m": 2, "authors_min": 0, "authors_max": 1},
        {"n": 1, "m": 2, "authors_min": 3, "authors_max": 3},
        {"n": 1, "m": 2, "authors_min": 2, "authors_max": 1},
        {"n": 1, "m": 2, "authors_min": 1, "authors_max": 1, "p_low": 0.9, "p_high": 0.1},
        {"n": 1, "m": 2, "authors_min": 1, "authors_max": 1, "p_high": 1.5},
    ],
)
def test_impossible_specs_are_rejected(kwargs):
    with pytest.raises(ValueError):
        generate(GeneratorSpec(seed=0, **kwargs))
