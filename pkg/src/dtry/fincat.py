"""Finite categories and directory-indexed families of their objects.

A category here is anything with ``has_object``, ``dom``, ``cod``,
``identity``, and ``compose`` (diagrammatic: ``compose(f, g)`` is "f
then g"). :class:`FinCat` realizes the interface with explicit validated
tables, loadable from JSON; :class:`FinSetSkeleton` realizes it with
computed function tables over the objects 0, 1, 2, ... read as the sets
{1..n}, where disjoint union is strictly associative: addition on
objects, block summation on functions.

On top of either sits the directory-indexed layer: a :class:`DtryObj`
assigns an object of the category to every complete path of a shape, and
a :class:`DtryMor` maps paths to paths and carries one component
morphism per path. Morphisms come in three variants that differ only in
which side indexes the data and what the index map must satisfy:

* GENERAL: index map from source paths to destination paths;
* ISO: the same, but the index map must be a bijection;
* PRODUCT: index map from destination paths back to source paths, the
  shape appropriate for projection-style morphisms.

``mu_obj``/``mu_mor`` flatten a directory of directory-objects into one,
concatenating paths. ``algebra_eval_obj``/``algebra_eval_mor`` evaluate
a directory-object in a strictly associative tensor (its path family in
lexicographic order), sending an ISO morphism to the tensor of its
components followed by the permutation its index map induces between the
two path orders.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import product as _cartesian
from typing import Any, Callable, Mapping, Sequence

from .core import Dtry, Leaf, Node, NonEmptyRecord
from .errors import NotACategoryError, NotComposableError
from .paths import Path

ObjId = Any
MorId = Any

__all__ = [
    "FinCat",
    "validate_fincat",
    "FinFn",
    "FinSetSkeleton",
    "Variant",
    "DtryObj",
    "DtryMor",
    "identity_mor",
    "compose_mor",
    "mu_obj",
    "mu_mor",
    "path_family",
    "shape_with_n_leaves",
    "StrictAlgebra",
    "finset_coproduct_algebra",
    "algebra_eval_obj",
    "algebra_eval_mor",
]


class FinCat:
    """A finite category given by explicit tables.

    ``morphisms`` maps each morphism id to its (dom, cod) pair,
    ``identity`` picks the identity morphism of each object, and
    ``compose`` is the sparse table of composites, keyed by (f, g) in
    diagrammatic order. Structural coherence (typing of the tables, and
    compose being defined exactly on the composable pairs) is checked on
    construction; the identity and associativity laws are checked too
    unless ``check_laws=False``, and can be rerun with :meth:`validate`.
    """

    def __init__(
        self,
        objects,
        morphisms: Mapping[MorId, tuple[ObjId, ObjId]],
        identity: Mapping[ObjId, MorId],
        compose: Mapping[tuple[MorId, MorId], MorId],
        *,
        check_laws: bool = True,
    ):
        self._objects = frozenset(objects)
        self._mor = {m: (d, c) for m, (d, c) in dict(morphisms).items()}
        self._identity = dict(identity)
        self._compose = dict(compose)
        self._check_structure()
        if check_laws:
            self.validate()

    def _check_structure(self):
        for m, (d, c) in self._mor.items():
            if d not in self._objects or c not in self._objects:
                raise NotACategoryError(f"morphism {m!r} has unknown endpoint", m)
        for x in self._objects:
            i = self._identity.get(x)
            if i is None or i not in self._mor:
                raise NotACategoryError(f"object {x!r} has no identity morphism", x)
            if self._mor[i] != (x, x):
                raise NotACategoryError(f"identity of {x!r} is not an endomorphism", x)
        for (f, g), h in self._compose.items():
            if f not in self._mor or g not in self._mor or h not in self._mor:
                raise NotACategoryError(f"composite entry ({f!r}, {g!r}) names unknown morphisms", (f, g))
            if self._mor[f][1] != self._mor[g][0]:
                raise NotACategoryError(f"composite defined for non-composable pair ({f!r}, {g!r})", (f, g))
            if self._mor[h] != (self._mor[f][0], self._mor[g][1]):
                raise NotACategoryError(f"composite of ({f!r}, {g!r}) has wrong endpoints", (f, g))
        for f, (_, cf) in self._mor.items():
            for g, (dg, _) in self._mor.items():
                if cf == dg and (f, g) not in self._compose:
                    raise NotACategoryError(f"missing composite for ({f!r}, {g!r})", (f, g))

    def validate(self):
        """Check the identity and associativity laws over the full tables.

        Raises:
            NotACategoryError: naming an offending morphism or triple.
        """
        for f, (d, c) in self._mor.items():
            if self._compose[(self._identity[d], f)] != f:
                raise NotACategoryError(f"left identity fails at {f!r}", f)
            if self._compose[(f, self._identity[c])] != f:
                raise NotACategoryError(f"right identity fails at {f!r}", f)
        by_dom: dict[ObjId, list[MorId]] = {}
        for m, (d, _) in self._mor.items():
            by_dom.setdefault(d, []).append(m)
        for (f, g), fg in self._compose.items():
            for h in by_dom.get(self._mor[g][1], ()):
                if self._compose[(fg, h)] != self._compose[(f, self._compose[(g, h)])]:
                    raise NotACategoryError(
                        f"associativity fails at ({f!r}, {g!r}, {h!r})", (f, g, h)
                    )

    @classmethod
    def from_json(cls, text: str, *, check_laws: bool = True) -> "FinCat":
        """Load tables from the JSON interchange form.

        The document holds ``objects`` (list of ids), ``morphisms`` (list
        of ``{"id":..., "dom":..., "cod":...}``), ``identity`` (object id
        to morphism id; JSON objects force string keys, so ids used here
        must be strings), and ``compose`` (list of ``[f, g, h]`` triples).
        """
        data = json.loads(text)
        morphisms = {m["id"]: (m["dom"], m["cod"]) for m in data["morphisms"]}
        compose = {(f, g): h for f, g, h in data["compose"]}
        return cls(data["objects"], morphisms, data["identity"], compose, check_laws=check_laws)

    def objects(self) -> frozenset:
        return self._objects

    def morphisms(self) -> list[MorId]:
        return list(self._mor)

    def has_object(self, x) -> bool:
        return x in self._objects

    def dom(self, f) -> ObjId:
        return self._mor[f][0]

    def cod(self, f) -> ObjId:
        return self._mor[f][1]

    def identity(self, x) -> MorId:
        return self._identity[x]

    def compose(self, f, g) -> MorId:
        composite = self._compose.get((f, g))
        if composite is None:
            raise NotComposableError(f"no composite for ({f!r}, {g!r})")
        return composite

    def hom(self, x, y) -> list[MorId]:
        return [m for m, (d, c) in self._mor.items() if d == x and c == y]


def validate_fincat(cat: FinCat) -> None:
    """Re-run the identity and associativity checks of a table category."""
    cat.validate()


@dataclass(frozen=True)
class FinFn:
    """A function {1..m} -> {1..cod} as an explicit image table.

    The domain size is the length of ``images``; entry ``i`` (1-based)
    maps to ``images[i-1]``.
    """

    cod: int
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if self.cod < 0:
            raise ValueError("codomain size must be nonnegative")
        for i in self.images:
            if not 1 <= i <= self.cod:
                raise ValueError(f"image {i} outside 1..{self.cod}")

    @property
    def dom(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __repr__(self) -> str:
        return f"FinFn({self.cod}, {self.images})"


@dataclass(frozen=True)
class FinSetSkeleton:
    """The sets {1..n} and all functions between them, computed on demand.

    Objects are the sizes themselves. The hom-sets are finite and
    enumerable per pair, but there is no global morphism table: the
    category has infinitely many objects. :meth:`truncate` materializes
    the full tables up to a size bound as a :class:`FinCat`.

    The class is stateless; all instances are equal and interchangeable.
    """

    def has_object(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool) and x >= 0

    def dom(self, f: FinFn) -> int:
        return f.dom

    def cod(self, f: FinFn) -> int:
        return f.cod

    def identity(self, n: int) -> FinFn:
        return FinFn(n, tuple(range(1, n + 1)))

    def compose(self, f: FinFn, g: FinFn) -> FinFn:
        if f.cod != g.dom:
            raise NotComposableError(
                f"cannot compose {f!r} (into {f.cod}) with {g!r} (out of {g.dom})"
            )
        return FinFn(g.cod, tuple(g.images[i - 1] for i in f.images))

    def hom(self, m: int, n: int) -> list[FinFn]:
        return [FinFn(n, images) for images in _cartesian(range(1, n + 1), repeat=m)]

    def block_sum(self, fns: Sequence[FinFn]) -> FinFn:
        """The disjoint union of functions, domains and codomains laid out in order."""
        total_cod = sum(f.cod for f in fns)
        images = []
        offset = 0
        for f in fns:
            images.extend(i + offset for i in f.images)
            offset += f.cod
        return FinFn(total_cod, tuple(images))

    def block_perm(self, sizes: Sequence[int], perm: Sequence[int]) -> FinFn:
        """The function reordering blocks: input slot i lands at output slot perm[i].

        Within a block the order of elements is preserved; the codomain
        lays the blocks out in their new order.
        """
        sizes = list(sizes)
        perm = list(perm)
        if sorted(perm) != list(range(len(sizes))):
            raise ValueError(f"not a permutation of 0..{len(sizes) - 1}: {perm}")
        out_sizes = [0] * len(sizes)
        for i, slot in enumerate(perm):
            out_sizes[slot] = sizes[i]
        out_offsets = [0] * len(sizes)
        acc = 0
        for j, size in enumerate(out_sizes):
            out_offsets[j] = acc
            acc += size
        images = []
        for i, size in enumerate(sizes):
            base = out_offsets[perm[i]]
            images.extend(base + t for t in range(1, size + 1))
        return FinFn(sum(sizes), tuple(images))

    def truncate(self, max_size: int, *, check_laws: bool = True) -> FinCat:
        """Explicit tables for the full subcategory on sizes 0..max_size."""
        objects = list(range(max_size + 1))
        morphisms = {}
        for m in objects:
            for n in objects:
                for f in self.hom(m, n):
                    morphisms[f] = (m, n)
        identity = {n: self.identity(n) for n in objects}
        compose = {}
        for f in morphisms:
            for g in morphisms:
                if f.cod == g.dom:
                    compose[(f, g)] = self.compose(f, g)
        return FinCat(objects, morphisms, identity, compose, check_laws=check_laws)


class Variant(Enum):
    """Which side indexes a directory-morphism's data, and what f0 must be."""

    GENERAL = "general"
    ISO = "iso"
    PRODUCT = "product"


@dataclass(frozen=True)
class DtryObj:
    """An object assignment over the complete paths of a directory shape."""

    cat: Any
    shape: Dtry
    assign: Mapping[Path, ObjId]

    def __post_init__(self):
        normalized = {Path(p): v for p, v in dict(self.assign).items()}
        shape_paths = set(self.shape.paths())
        if set(normalized) != shape_paths:
            raise ValueError(
                "assignment domain must be exactly the complete paths of the shape"
            )
        for p, v in normalized.items():
            if not self.cat.has_object(v):
                raise ValueError(f"{v!r} assigned at {p!r} is not an object of the category")
        object.__setattr__(self, "assign", {p: normalized[p] for p in sorted(normalized)})

    @classmethod
    def of(cls, cat, assign: Mapping) -> "DtryObj":
        """Build shape and assignment together from a path-to-object mapping."""
        normalized = {Path(p): v for p, v in dict(assign).items()}
        shape = Dtry.from_path_map({p: None for p in normalized})
        return cls(cat, shape, normalized)

    def paths(self) -> list[Path]:
        return list(self.assign)

    def __repr__(self) -> str:
        entries = ", ".join(f"{str(p)!r}: {v!r}" for p, v in self.assign.items())
        return f"DtryObj({{{entries}}})"


@dataclass(frozen=True)
class DtryMor:
    """A morphism of directory-objects: an index map plus one component per path.

    For GENERAL and ISO, ``f0`` maps source paths to destination paths
    and ``f1[p]`` is a category morphism ``src.assign[p] ->
    dst.assign[f0[p]]``. For PRODUCT, ``f0`` maps destination paths back
    to source paths and ``f1[q]`` is ``src.assign[f0[q]] ->
    dst.assign[q]``. Validity is checked on construction, so composing
    never has to trust its inputs (the bijection requirement of ISO is
    rechecked on every composite's result too, since it is constructed).
    """

    variant: Variant
    src: DtryObj
    dst: DtryObj
    f0: Mapping[Path, Path]
    f1: Mapping[Path, MorId]

    def __post_init__(self):
        cat = self.src.cat
        if self.dst.cat != cat:
            raise ValueError("source and destination live in different categories")
        index = self.dst.paths() if self.variant is Variant.PRODUCT else self.src.paths()
        target = self.src.paths() if self.variant is Variant.PRODUCT else self.dst.paths()
        f0 = {Path(p): Path(q) for p, q in dict(self.f0).items()}
        f1 = {Path(p): m for p, m in dict(self.f1).items()}
        if set(f0) != set(index):
            raise ValueError("index map must be total on its indexing side")
        if set(f1) != set(index):
            raise ValueError("components must be indexed exactly like the index map")
        target_set = set(target)
        for p, q in f0.items():
            if q not in target_set:
                raise ValueError(f"index map sends {p!r} outside the other side: {q!r}")
        if self.variant is Variant.ISO and len(set(f0.values())) != len(target):
            raise ValueError("index map of an ISO morphism must be a bijection")
        for p in index:
            if self.variant is Variant.PRODUCT:
                want_dom, want_cod = self.src.assign[f0[p]], self.dst.assign[p]
            else:
                want_dom, want_cod = self.src.assign[p], self.dst.assign[f0[p]]
            if cat.dom(f1[p]) != want_dom or cat.cod(f1[p]) != want_cod:
                raise ValueError(
                    f"component at {p!r} has type {cat.dom(f1[p])!r} -> {cat.cod(f1[p])!r}, "
                    f"expected {want_dom!r} -> {want_cod!r}"
                )
        object.__setattr__(self, "f0", {p: f0[p] for p in sorted(f0)})
        object.__setattr__(self, "f1", {p: f1[p] for p in sorted(f1)})


def identity_mor(x: DtryObj, variant: Variant = Variant.GENERAL) -> DtryMor:
    """The identity on ``x`` in any variant: identity index map, identity components."""
    ps = x.paths()
    return DtryMor(
        variant,
        x,
        x,
        {p: p for p in ps},
        {p: x.cat.identity(x.assign[p]) for p in ps},
    )


def compose_mor(f: DtryMor, g: DtryMor) -> DtryMor:
    """The composite ``f`` then ``g``.

    Index maps compose in the direction their variant dictates: forward
    for GENERAL and ISO, backward for PRODUCT (the composite's index map
    is ``f0_f after f0_g``). Components compose in the category.

    Raises:
        NotComposableError: on variant mismatch or when ``f.dst != g.src``.
    """
    if f.variant is not g.variant:
        raise NotComposableError(f"variant mismatch: {f.variant} vs {g.variant}")
    if f.dst != g.src:
        raise NotComposableError("destination of the first must equal source of the second")
    cat = f.src.cat
    if f.variant is Variant.PRODUCT:
        f0 = {q: f.f0[g.f0[q]] for q in g.dst.paths()}
        f1 = {q: cat.compose(f.f1[g.f0[q]], g.f1[q]) for q in g.dst.paths()}
        return DtryMor(Variant.PRODUCT, f.src, g.dst, f0, f1)
    f0 = {p: g.f0[f.f0[p]] for p in f.src.paths()}
    f1 = {p: cat.compose(f.f1[p], g.f1[f.f0[p]]) for p in f.src.paths()}
    return DtryMor(f.variant, f.src, g.dst, f0, f1)


def mu_obj(dd: Dtry, *, cat=None) -> DtryObj:
    """Flatten a directory of directory-objects, concatenating paths.

    Entries holding empty objects vanish with their outer paths. For an
    empty outer directory the category cannot be inferred, so pass
    ``cat=`` explicitly there.
    """
    outer = dd.path_map()
    if cat is None:
        if not outer:
            raise ValueError("cannot infer the category of an empty directory; pass cat=")
        cat = next(iter(outer.values())).cat
    assign = {}
    for p, obj in outer.items():
        for q, v in obj.assign.items():
            assign[p.concat(q)] = v
    shape = dd.map_values(lambda o: o.shape).flatten()
    return DtryObj(cat, shape, assign)


def mu_mor(dm: Dtry, *, cat=None, variant: Variant | None = None) -> DtryMor:
    """Flatten a directory of directory-morphisms.

    The outer directory indexes both sides at once: the result goes from
    the flattening of the sources to the flattening of the destinations,
    with index map ``p*q -> p*(inner f0 at p)(q)`` and the inner
    components carried across unchanged.

    Raises:
        NotComposableError: when the entries mix variants or categories.
    """
    inner = dm.path_map()
    variants = {m.variant for m in inner.values()}
    if len(variants) > 1:
        raise NotComposableError(f"mixed variants in one directory: {variants}")
    mors = list(inner.values())
    if any(m.src.cat != mors[0].src.cat for m in mors[1:]):
        raise NotComposableError("mixed categories in one directory")
    if variant is None:
        variant = variants.pop() if variants else Variant.GENERAL
    src = mu_obj(dm.map_values(lambda m: m.src), cat=cat)
    dst = mu_obj(dm.map_values(lambda m: m.dst), cat=cat)
    f0 = {}
    f1 = {}
    for p, m in inner.items():
        for q, target in m.f0.items():
            f0[p.concat(q)] = p.concat(target)
        for q, component in m.f1.items():
            f1[p.concat(q)] = component
    return DtryMor(variant, src, dst, f0, f1)


def path_family(x: DtryObj) -> list[tuple[Path, ObjId]]:
    """The assigned objects in lexicographic path order."""
    return list(x.assign.items())


def shape_with_n_leaves(n: int) -> Dtry:
    """A deterministic shape with exactly ``n`` complete paths.

    Balanced binary splitting with children named ``l`` and ``r``; 0 is
    the empty directory and 1 the bare leaf.
    """
    if n < 0:
        raise ValueError("leaf count must be nonnegative")
    if n == 0:
        return Dtry.empty()
    return Dtry(_balanced_tree(n))


def _balanced_tree(n: int):
    if n == 1:
        return Leaf(None)
    left = n // 2
    return Node(NonEmptyRecord({"l": _balanced_tree(left), "r": _balanced_tree(n - left)}))


@dataclass(frozen=True)
class StrictAlgebra:
    """Strictly associative tensor data for evaluating directory-objects.

    ``tensor_obj``/``tensor_mor`` take the whole list at once and must
    satisfy: the empty tensor is ``unit_obj`` (respectively its
    identity), a singleton tensor is its only entry, and tensoring a
    concatenation equals tensoring the tensors. ``permute(objs, perm)``
    is the morphism from the tensor of ``objs`` to the tensor of the
    reordered list, where entry ``i`` moves to slot ``perm[i]``.
    """

    cat: Any
    unit_obj: ObjId
    tensor_obj: Callable[[Sequence[ObjId]], ObjId]
    tensor_mor: Callable[[Sequence[MorId]], MorId]
    permute: Callable[[Sequence[ObjId], Sequence[int]], MorId]


def finset_coproduct_algebra(skel: FinSetSkeleton | None = None) -> StrictAlgebra:
    """Disjoint union as a strict tensor on the skeleton of finite sets."""
    skel = skel if skel is not None else FinSetSkeleton()
    return StrictAlgebra(
        cat=skel,
        unit_obj=0,
        tensor_obj=lambda objs: sum(objs),
        tensor_mor=skel.block_sum,
        permute=skel.block_perm,
    )


def algebra_eval_obj(alg: StrictAlgebra, x: DtryObj) -> ObjId:
    """Tensor the path family of ``x`` in lexicographic order."""
    family = path_family(x)
    if not family:
        return alg.unit_obj
    return alg.tensor_obj([v for _, v in family])


def algebra_eval_mor(alg: StrictAlgebra, m: DtryMor) -> MorId:
    """Evaluate an ISO morphism as a string diagram.

    Tensor the components in source path order, then permute the
    resulting wires into destination path order: the wire at source
    position ``i`` lands at the position of ``f0[p_i]`` among the
    destination paths.
    """
    if m.variant is not Variant.ISO:
        raise ValueError("algebra evaluation needs the bijective variant")
    cat = alg.cat
    src_paths = m.src.paths()
    dst_paths = m.dst.paths()
    if not src_paths:
        return cat.identity(alg.unit_obj)
    components = [m.f1[p] for p in src_paths]
    tensored = alg.tensor_mor(components)
    slot_of = {q: j for j, q in enumerate(dst_paths)}
    perm = [slot_of[m.f0[p]] for p in src_paths]
    carried = [m.dst.assign[m.f0[p]] for p in src_paths]
    return cat.compose(tensored, alg.permute(carried, perm))
