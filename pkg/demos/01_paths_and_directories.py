"""Tour of names, paths, and the directory structure itself.

Run with: python3 demos/01_paths_and_directories.py
"""

from dtry import Dtry, Path, PrefixConflictError

# Paths are dot-separated sequences of names. Parsing validates every
# segment; the empty string is the root path.
p = Path("oscillator.mass")
print("path:", p, "| segments:", tuple(p), "| length:", len(p))
print("root path is empty:", len(Path("")) == 0)
print("concatenation:", Path("a.b") + Path("c"))

# A directory maps a prefix-free set of paths to values. The easiest way
# in is a path map.
d = Dtry.from_path_map(
    {
        "oscillator.mass.momentum": 0.0,
        "oscillator.spring.displacement": 1.0,
        "thermal_capacity.entropy": 16.56,
    }
)
print("\ndirectory with", len(d), "entries:")
for path, value in d.path_map().items():
    print("  ", path, "->", value)

# Lookup returns a subdirectory: a leaf wrapper for complete paths, a
# subtree for interior ones, None when nothing is there.
sub = d.lookup(Path("oscillator"))
print("\nsubdirectory at 'oscillator':", sorted(str(q) for q in sub.paths()))
leaf = d.lookup(Path("thermal_capacity.entropy"))
print("leaf value:", leaf.value)
print("missing path:", d.lookup(Path("no.such.entry")))

# Prefix discipline: a path and a proper prefix of it cannot both be
# bound. Insertion reports the exact offending pair.
try:
    d.insert(Path("oscillator.mass"), "boom")
except PrefixConflictError as exc:
    print("\nrejected insert:", exc)

# Directories of directories flatten by concatenating paths.
nested = Dtry.from_path_map(
    {
        "left": Dtry.from_path_map({"x": 1, "y": 2}),
        "right": Dtry.from_path_map({"x": 3}),
        "spare": Dtry.empty(),
    }
)
flat = nested.flatten()
print("\nflattened:", {str(k): v for k, v in flat.path_map().items()})
print("note: the empty 'spare' entry vanished entirely")

# Filtering keeps a sub-selection of leaves and deletes any emptied
# subtrees on the way out.
odd = flat.filter(lambda v: v % 2 == 1)
print("odd leaves only:", {str(k): v for k, v in odd.path_map().items()})
