"""
Hash-consing table for canonical subtree classes
Structurally equal keys get the same dense class id, so equal subtrees share one entry
"""

from typing import Dict, Hashable, List, Optional

from data.models import CacheStats


class CanonicalCache:
    """
    Interning table mapping structural keys to class ids

    A key is built from a node's own data plus the class ids of its children, so
    two subtrees receive the same id iff they are structurally identical.
    """

    def __init__(self):
        self._classes: Dict[Hashable, int] = {}
        self._keys: List[Hashable] = []
        self._stats = CacheStats()

    def intern(self, key: Hashable) -> int:
        """
        Return the class id of key, allocating a new one on first sight

        Args:
            key: hashable structural key

        Returns:
            Dense class id (0, 1, 2, ... in order of first appearance)
        """
        self._stats.lookups += 1
        class_id = self._classes.get(key)
        if class_id is not None:
            self._stats.hits += 1
            return class_id

        class_id = len(self._keys)
        self._classes[key] = class_id
        self._keys.append(key)
        self._stats.entries = len(self._keys)
        return class_id

    def lookup(self, key: Hashable) -> Optional[int]:
        """Class id of key without allocating"""
        return self._classes.get(key)

    def key_of(self, class_id: int) -> Hashable:
        return self._keys[class_id]

    def __len__(self) -> int:
        return len(self._keys)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._classes

    def get_stats(self) -> CacheStats:
        return CacheStats(self._stats.entries, self._stats.lookups, self._stats.hits)

    def clear(self):
        self._classes.clear()
        self._keys.clear()
        self._stats = CacheStats()
