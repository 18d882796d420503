"""Split systems, Buneman graphs and injectivity dimensions.

Thin wrapper over the _splitsys extension module. Installed builds place the
extension inside this package; in-tree builds put it on sys.path directly.
"""

try:
    from . import _splitsys as _impl
except ImportError:
    import _splitsys as _impl

__all__ = [
    "FormatError",
    "ResourceLimitError",
    "SplitSystem",
    "bipartite_pairs6",
    "buneman_dot",
    "buneman_summary",
    "consecutive_pairs5",
    "dices",
    "example_network5",
    "example_tree5",
    "half_grid",
    "half_grid_root",
    "id2_search",
    "id_search",
    "idr_search",
    "injectivity_collision",
    "is_bijective",
    "is_injective",
    "is_rooted_injective",
    "is_surjective",
    "maximal_circular",
    "median",
    "nonconsecutive_pairs_system",
    "random_system",
    "scan_bijective",
    "small_splits_system",
    "trivial_system",
    "witness_id8",
]

for _name in __all__:
    globals()[_name] = getattr(_impl, _name)
del _name, _impl
