"""
Utilities for the multigraph API.
"""

from collections.abc import Mapping

class CaseInsensitiveDict(Mapping):
    """
    Read-only mapping with case-insensitive string keys. Used to
    resolve family kinds and theorem names typed on the command line
    (``wheel``, ``Wheel`` and ``WHEEL`` are the same family).
    """
    def __init__(self, d):
        self._d = d
        self._s = dict((k.lower(), k) for k in d)
    def __contains__(self, k):
        return isinstance(k, str) and k.lower() in self._s
    def __len__(self):
        return len(self._s)
    def __iter__(self):
        return iter(self._d)
    def __getitem__(self, k):
        return self._d[self._s[k.lower()]]
    def actual_key_case(self, k):
        return self._s.get(k.lower())

class BaseDictlike(object):
    """
    Read-only dict interface built on ``keys`` and ``__getitem__``.
    Edge colorings are dict-like over edge ids, homogeneity
    reports over vertices.

    Subclasses override ``has_key`` rather than ``__contains__``,
    and override ``__len__`` when the size is known.
    """
    def keys(self):
        raise NotImplementedError
    def __getitem__(self, k):
        raise NotImplementedError
    def __iter__(self):
        yield from self.keys()
    def has_key(self, k):
        return any(ek == k for ek in self.keys())
    def __contains__(self, k):
        return self.has_key(k)
    def items(self):
        for k in self.keys():
            yield k, self[k]
    def values(self):
        for _, v in self.items():
            yield v
    def __len__(self):
        return sum(1 for _ in self.keys())
