"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the library's own traversal logic:
prefix-freeness is the quadratic definition on raw tuples, position sets
are computed by set comprehension, and the flattening pitfall uses a
naive string join. Tests compare library output against these.
"""

from __future__ import annotations

import random

from dtry.core import Dtry, Leaf, Node, NonEmptyRecord
from dtry.fincat import DtryMor, DtryObj, Variant
from dtry.maybe import NOTHING, Just
from dtry.paths import Name, Path

NAME_POOL = ("a", "b", "c", "x", "y", "z")
VALUE_POOL = (0, 1, 2, 3)


# ---------------------------------------------------------------- oracles

def oracle_prefix_free(paths) -> bool:
    """Quadratic prefix-freeness straight from the definition."""
    ps = [tuple(p) for p in paths]
    for p in ps:
        for q in ps:
            if p != q and len(p) <= len(q) and q[: len(p)] == p:
                return False
    return True


def oracle_position_set(dd: Dtry) -> set[tuple]:
    """The concatenation set {p * q} of a two-layer directory, by comprehension."""
    return {
        tuple(p) + tuple(q)
        for p, inner in dd.path_map().items()
        for q in inner.path_map()
    }


def naive_flatten(outer: dict) -> dict:
    """String-keyed flattening with a '.' join; conflates colliding keys."""
    result = {}
    for key, inner in outer.items():
        for subkey, value in inner.items():
            result[f"{key}.{subkey}"] = value
    return result


def check_representation(d: Dtry) -> None:
    """Assert the structural invariants of the trie representation."""
    assert d.root is None or isinstance(d.root, (Leaf, Node))
    if d.root is not None:
        _check_tree(d.root)
    assert oracle_prefix_free(d.path_map())


def _check_tree(tree) -> None:
    if isinstance(tree, Leaf):
        return
    assert isinstance(tree, Node)
    record = tree.children
    assert isinstance(record, NonEmptyRecord)
    assert len(record) >= 1
    keys = list(record.keys())
    assert keys == sorted(keys)
    for key, child in record.items():
        assert isinstance(key, Name)
        _check_tree(child)


# ------------------------------------------------------------- generators

def random_tree(rng: random.Random, depth: int, branching: int, names, values, leaf_prob: float):
    if depth == 0 or rng.random() < leaf_prob:
        return Leaf(rng.choice(values))
    width = rng.randint(1, min(branching, len(names)))
    chosen = rng.sample(list(names), width)
    return Node(
        NonEmptyRecord(
            {n: random_tree(rng, depth - 1, branching, names, values, leaf_prob) for n in chosen}
        )
    )


def random_dtry(
    rng: random.Random,
    *,
    depth: int = 3,
    branching: int = 3,
    names=NAME_POOL,
    values=VALUE_POOL,
    leaf_prob: float = 0.45,
    empty_prob: float = 0.12,
) -> Dtry:
    if rng.random() < empty_prob:
        return Dtry.empty()
    return Dtry(random_tree(rng, depth, branching, names, values, leaf_prob))


def random_nested_dtry(rng: random.Random, layers: int, **kwargs) -> Dtry:
    """A directory of directories of ... (``layers`` deep) of scalars."""
    if layers <= 1:
        return random_dtry(rng, **kwargs)
    return random_dtry(rng, **kwargs).map_values(
        lambda _: random_nested_dtry(rng, layers - 1, **kwargs)
    )


def random_path(rng: random.Random, *, names=NAME_POOL, max_len: int = 4) -> Path:
    return Path(rng.choice(names) for _ in range(rng.randint(0, max_len)))


def random_maybe_maybe_record(rng: random.Random, *, names=NAME_POOL, values=VALUE_POOL):
    """A NonEmptyRecord of doubly optional values, all shapes of absence mixed."""
    width = rng.randint(1, 4)
    entries = {}
    for name in rng.sample(list(names), width):
        roll = rng.random()
        if roll < 1 / 3:
            entries[name] = NOTHING
        elif roll < 2 / 3:
            entries[name] = Just(NOTHING)
        else:
            entries[name] = Just(Just(rng.choice(values)))
    return NonEmptyRecord(entries)


# ------------------------------------------------- directory-object generators

def random_shape(rng: random.Random, *, max_leaves: int = 3, names=NAME_POOL) -> Dtry:
    """A random shape (None-valued directory) with at most ``max_leaves`` paths."""
    while True:
        shape = random_dtry(
            rng, depth=2, branching=2, names=names, values=(None,), leaf_prob=0.55
        )
        if len(shape) <= max_leaves:
            return shape


def random_shape_with_leaves(rng: random.Random, count: int, *, names=NAME_POOL) -> Dtry:
    while True:
        shape = random_dtry(
            rng, depth=2, branching=3, names=names, values=(None,),
            leaf_prob=0.4, empty_prob=0.0 if count else 1.0,
        )
        if len(shape) == count:
            return shape


def random_dtry_obj(
    rng: random.Random, cat, *, max_leaves: int = 3, sizes=(1, 2, 3), names=NAME_POOL
) -> DtryObj:
    shape = random_shape(rng, max_leaves=max_leaves, names=names)
    return DtryObj(cat, shape, {p: rng.choice(sizes) for p in shape.paths()})


def random_mor_from(
    rng: random.Random, src: DtryObj, variant: Variant, *, sizes=(1, 2, 3), names=NAME_POOL
) -> DtryMor:
    """A random morphism out of ``src``, generating its destination too.

    Sizes are kept positive so every needed hom-set is inhabited.
    """
    cat = src.cat
    src_paths = src.paths()
    if variant is Variant.ISO:
        dst_shape = random_shape_with_leaves(rng, len(src_paths), names=names)
        dst_paths = dst_shape.paths()
        shuffled = list(dst_paths)
        rng.shuffle(shuffled)
        f0 = dict(zip(src_paths, shuffled))
        dst_assign = {f0[p]: rng.choice(sizes) for p in src_paths}
        dst = DtryObj(cat, dst_shape, dst_assign)
        f1 = {p: rng.choice(cat.hom(src.assign[p], dst.assign[f0[p]])) for p in src_paths}
        return DtryMor(variant, src, dst, f0, f1)
    if variant is Variant.GENERAL:
        while True:
            dst = random_dtry_obj(rng, cat, sizes=sizes, names=names)
            if dst.paths() or not src_paths:
                break
        dst_paths = dst.paths()
        f0 = {p: rng.choice(dst_paths) for p in src_paths}
        f1 = {p: rng.choice(cat.hom(src.assign[p], dst.assign[f0[p]])) for p in src_paths}
        return DtryMor(variant, src, dst, f0, f1)
    # PRODUCT: the index map runs from destination paths to source paths.
    while True:
        dst = random_dtry_obj(rng, cat, sizes=sizes, names=names)
        if src_paths or not dst.paths():
            break
    f0 = {q: rng.choice(src_paths) for q in dst.paths()}
    f1 = {q: rng.choice(cat.hom(src.assign[f0[q]], dst.assign[q])) for q in dst.paths()}
    return DtryMor(Variant.PRODUCT, src, dst, f0, f1)


# -------------------------------------------------------- worked example

EXAMPLE_FLAT = (
    "oscillator.mass.momentum = 0.0\n"
    "oscillator.spring.displacement = 1.0\n"
    "thermal_capacity.entropy = 16.56\n"
)

EXAMPLE_PATH_MAP = {
    Path("oscillator.mass.momentum"): "0.0",
    Path("oscillator.spring.displacement"): "1.0",
    Path("thermal_capacity.entropy"): "16.56",
}


def example_directory() -> Dtry:
    return Dtry.from_path_map(EXAMPLE_PATH_MAP)
