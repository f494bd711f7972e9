"""Directory tries: values bound to a prefix-free set of dotted paths.

A directory is either empty or a nonempty tree whose internal nodes are
nonempty records of child trees keyed by :class:`~dtry.paths.Name` and
whose leaves carry values. Emptiness exists only at the top level: no
subtree is ever an empty node. That single constraint is what keeps the
set of complete paths prefix-free, makes the path-map view faithful, and
forces :meth:`Dtry.filter` to delete subdirectories it empties out.

The structural operations come in two layers. ``filter_nothings`` and
``distrib`` push leaf-level absence outward through the tree (dropping
absent entries of a record, and a record that loses all its entries
becomes absent itself). ``flatten`` grafts a directory of directories
into one directory by running ``distrib`` first, so inner empties vanish
instead of leaving dangling nodes.

>>> d = Dtry.from_path_map({"a.x": 1, "a.y": 2, "b": 3})
>>> d.lookup("a").path_map()
{Path('x'): 1, Path('y'): 2}
>>> d.filter(lambda v: v > 2).path_map()
{Path('b'): 3}
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, Iterable, Iterator, Mapping, TypeVar

from .errors import PrefixConflictError
from .maybe import NOTHING, Just
from .paths import Name, Path

T = TypeVar("T")

__all__ = [
    "NonEmptyRecord",
    "Leaf",
    "Node",
    "Dtry",
    "filter_nothings",
    "distrib",
    "merge_disjoint",
]


class NonEmptyRecord(Generic[T]):
    """An immutable mapping from names to values with at least one entry.

    Entries iterate in ascending byte order of their keys, which is what
    makes every traversal in this module deterministic.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[str, T] | Iterable[tuple[str, T]]):
        raw = dict(entries)
        if not raw:
            raise ValueError("record must have at least one entry")
        coerced = {Name(k): v for k, v in raw.items()}
        self._entries = {k: coerced[k] for k in sorted(coerced)}

    def keys(self):
        return self._entries.keys()

    def values(self):
        return self._entries.values()

    def items(self):
        return self._entries.items()

    def get(self, key, default=None):
        return self._entries.get(key, default)

    def insert(self, key, value) -> "NonEmptyRecord[T]":
        """A new record with one entry added or replaced."""
        merged = dict(self._entries)
        merged[Name(key)] = value
        return NonEmptyRecord(merged)

    def map_values(self, f: Callable[[T], Any]) -> "NonEmptyRecord":
        return NonEmptyRecord({k: f(v) for k, v in self._entries.items()})

    def __getitem__(self, key) -> T:
        return self._entries[key]

    def __contains__(self, key) -> bool:
        return key in self._entries

    def __iter__(self) -> Iterator[Name]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NonEmptyRecord):
            return NotImplemented
        return self._entries == other._entries

    __hash__ = None

    def __repr__(self) -> str:
        return f"NonEmptyRecord({self._entries!r})"


@dataclass(frozen=True)
class Leaf(Generic[T]):
    """A terminal tree node holding one value."""

    value: T


@dataclass(frozen=True)
class Node:
    """An internal tree node; children are themselves nonempty trees."""

    children: NonEmptyRecord


def filter_nothings(record: NonEmptyRecord) -> NonEmptyRecord | None:
    """Drop absent entries of a record, unwrapping the present ones.

    Returns None exactly when every entry was NOTHING: a record cannot be
    empty, so total absence inside becomes absence of the whole record.
    """
    kept = {}
    for key, entry in record.items():
        if entry is NOTHING:
            continue
        if not isinstance(entry, Just):
            raise TypeError(f"record entry {key!r} is not Just(...) or NOTHING: {entry!r}")
        kept[key] = entry.value
    return NonEmptyRecord(kept) if kept else None


def distrib(tree: Leaf | Node) -> Leaf | Node | None:
    """Push leaf-level absence outward through a tree.

    Leaves hold ``Just(value)`` or ``NOTHING``; the result is the tree of
    the present values, with subtrees that lost every leaf deleted, or
    None when nothing remains at all.
    """
    if isinstance(tree, Leaf):
        entry = tree.value
        if entry is NOTHING:
            return None
        if not isinstance(entry, Just):
            raise TypeError(f"leaf value is not Just(...) or NOTHING: {entry!r}")
        return Leaf(entry.value)
    wrapped = tree.children.map_values(lambda child: _as_maybe(distrib(child)))
    kept = filter_nothings(wrapped)
    return None if kept is None else Node(kept)


def _as_maybe(tree):
    return NOTHING if tree is None else Just(tree)


def _map_tree(tree, f):
    if isinstance(tree, Leaf):
        return Leaf(f(tree.value))
    return Node(tree.children.map_values(lambda child: _map_tree(child, f)))


def _graft(tree):
    # Leaves hold trees; splice them in place.
    if isinstance(tree, Leaf):
        return tree.value
    return Node(tree.children.map_values(_graft))


def _singleton_tree(names, value):
    tree = Leaf(value)
    for name in reversed(tuple(names)):
        tree = Node(NonEmptyRecord({name: tree}))
    return tree


def _collect_paths(tree, prefix, out):
    if isinstance(tree, Leaf):
        out[Path(prefix)] = tree.value
        return
    for name, child in tree.children.items():
        _collect_paths(child, prefix + (name,), out)


def _least_path_under(tree, prefix):
    # Lex-least complete path extending prefix inside this subtree.
    names = list(prefix)
    while isinstance(tree, Node):
        name = next(iter(tree.children))
        names.append(name)
        tree = tree.children[name]
    return Path(names)


def _insert_tree(tree, path, depth, value):
    if isinstance(tree, Leaf):
        raise PrefixConflictError(existing=Path(path[:depth]), incoming=path)
    if depth == len(path):
        raise PrefixConflictError(existing=_least_path_under(tree, path), incoming=path)
    name = path[depth]
    child = tree.children.get(name)
    if child is None:
        return Node(tree.children.insert(name, _singleton_tree(path[depth + 1 :], value)))
    return Node(tree.children.insert(name, _insert_tree(child, path, depth + 1, value)))


class Dtry(Generic[T]):
    """An immutable directory of values indexed by prefix-free paths."""

    __slots__ = ("_root",)

    def __init__(self, root: Leaf | Node | None = None):
        if root is not None and not isinstance(root, (Leaf, Node)):
            raise TypeError(f"root must be Leaf, Node, or None, got {root!r}")
        self._root = root

    @property
    def root(self) -> Leaf | Node | None:
        return self._root

    @classmethod
    def empty(cls) -> "Dtry[T]":
        return cls(None)

    @classmethod
    def leaf(cls, value: T) -> "Dtry[T]":
        """The directory binding ``value`` to the root path."""
        return cls(Leaf(value))

    @classmethod
    def singleton(cls, path, value: T) -> "Dtry[T]":
        """The directory with exactly one entry at ``path``."""
        return cls(_singleton_tree(Path(path), value))

    @classmethod
    def from_path_map(cls, entries: Mapping) -> "Dtry[T]":
        """Build a directory from a path-to-value mapping.

        Keys are processed in lexicographic order, so on a conflicting
        input the reported pair is deterministic.

        Raises:
            PrefixConflictError: when one key is a prefix of another.
        """
        items = sorted(
            ((Path(p), v) for p, v in dict(entries).items()), key=lambda kv: kv[0]
        )
        result = cls.empty()
        for path, value in items:
            result = result.insert(path, value)
        return result

    @property
    def is_empty(self) -> bool:
        return self._root is None

    @property
    def is_leaf(self) -> bool:
        return isinstance(self._root, Leaf)

    @property
    def value(self) -> T:
        """The value at the root path; only single-value directories have one."""
        if not isinstance(self._root, Leaf):
            raise ValueError("directory does not bind a value at the root path")
        return self._root.value

    def prefix(self, name) -> "Dtry[T]":
        """Push the whole directory below one name. Empty stays empty."""
        if self._root is None:
            return self
        return Dtry(Node(NonEmptyRecord({Name(name): self._root})))

    def map_values(self, f: Callable[[T], Any]) -> "Dtry":
        if self._root is None:
            return self
        return Dtry(_map_tree(self._root, f))

    def lookup(self, path) -> "Dtry[T] | None":
        """The subdirectory at ``path``, or None when absent.

        The root path returns the directory itself; a complete path
        returns its value wrapped as a single-value directory.
        """
        path = Path(path)
        tree = self._root
        if tree is None:
            return self if not path else None
        for name in path:
            if isinstance(tree, Leaf):
                return None
            tree = tree.children.get(name)
            if tree is None:
                return None
        return Dtry(tree)

    def insert(self, path, value: T) -> "Dtry[T]":
        """A new directory with ``value`` bound at ``path``.

        Raises:
            PrefixConflictError: when ``path`` is already bound, extends a
                bound path, or is a prefix of one. Overwriting by insert
                would silently change the shape, so conflicts are hard
                errors; build a fresh directory instead.
        """
        path = Path(path)
        if self._root is None:
            return Dtry.singleton(path, value)
        return Dtry(_insert_tree(self._root, path, 0, value))

    def flatten(self) -> "Dtry":
        """Graft a directory of directories into one directory.

        Inner empty directories vanish together with the paths that led
        to them: absence is first pushed outward with :func:`distrib`,
        then the remaining inner trees are spliced in place.
        """
        if self._root is None:
            return self
        wrapped = _map_tree(self._root, _root_as_maybe)
        swapped = distrib(wrapped)
        return Dtry(None if swapped is None else _graft(swapped))

    def bind(self, f: Callable[[T], "Dtry"]) -> "Dtry":
        """Replace every value by a directory of its own and flatten."""
        return self.map_values(f).flatten()

    def filter(self, pred: Callable[[T], bool]) -> "Dtry[T]":
        """Keep entries whose value satisfies ``pred``.

        Implemented by marking each leaf present or absent and running
        :func:`distrib`, so emptied subdirectories are deleted rather
        than left behind.
        """
        if self._root is None:
            return self
        marked = _map_tree(self._root, lambda v: Just(v) if pred(v) else NOTHING)
        return Dtry(distrib(marked))

    def path_map(self) -> dict[Path, T]:
        """The complete paths and their values, in lexicographic order."""
        out: dict[Path, T] = {}
        if self._root is not None:
            _collect_paths(self._root, (), out)
        return out

    def paths(self) -> list[Path]:
        """The complete paths in lexicographic order."""
        return list(self.path_map())

    def __len__(self) -> int:
        return len(self.path_map())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dtry):
            return NotImplemented
        return self._root == other._root

    __hash__ = None

    def __repr__(self) -> str:
        entries = ", ".join(f"{str(p)!r}: {v!r}" for p, v in self.path_map().items())
        return f"Dtry({{{entries}}})"


def _root_as_maybe(inner):
    if not isinstance(inner, Dtry):
        raise TypeError(f"flatten needs every value to be a directory, got {inner!r}")
    return NOTHING if inner._root is None else Just(inner._root)


def merge_disjoint(entries: Mapping[str, Dtry]) -> Dtry:
    """Combine directories under distinct names into one directory.

    Equivalent to flattening the node whose children are the given
    directories: entries mapping to empty directories vanish, and the
    result is empty when all of them were.
    """
    record = NonEmptyRecord({k: Leaf(d) for k, d in dict(entries).items()})
    return Dtry(Node(record)).flatten()
