"""Independent reference implementations used only by the tests.

Multisets here are plain lists of positive integers (the finite
denominators) and arrows are tuples of indices.  Nothing is shared with the
package beyond the integers themselves.
"""

from itertools import product
from math import gcd, lcm


def homs(xs, ys):
    """All index maps xs -> ys with ys[f(i)] dividing xs[i], lexicographic."""
    return [f for f in product(range(len(ys)), repeat=len(xs))
            if all(xs[i] % ys[j] == 0 for i, j in enumerate(f))]


def product_denoms(*factors):
    return [lcm(*t) if t else 1 for t in product(*factors)]


def coequalizer_classes(n, pairs):
    cls = list(range(n))
    changed = True
    while changed:
        changed = False
        for a, b in pairs:
            lo = min(cls[a], cls[b])
            for i in range(n):
                if cls[i] in (cls[a], cls[b]) and cls[i] != lo:
                    cls[i] = lo
                    changed = True
    groups = {}
    for i in range(n):
        groups.setdefault(cls[i], []).append(i)
    return sorted(groups.values())


def class_denoms(ds, classes):
    out = []
    for c in classes:
        g = 0
        for i in c:
            g = gcd(g, ds[i])
        out.append(g)
    return out


def chain_hom_count(m, n):
    """Maps S_m -> S_n on numerators preserving truncated sum, complement and zero."""
    count = 0
    for table in product(range(n + 1), repeat=m + 1):
        if table[0] != 0:
            continue
        if any(table[m - a] != n - table[a] for a in range(m + 1)):
            continue
        if all(table[min(a + b, m)] == min(table[a] + table[b], n)
               for a in range(m + 1) for b in range(m + 1)):
            count += 1
    return count


def partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def relation_count(ds):
    """Partitions times class-constant choices of a common divisor."""
    total = 0
    for p in partitions(list(range(len(ds)))):
        k = 1
        for block in p:
            g = 0
            for i in block:
                g = gcd(g, ds[i])
            k *= len(divisors(g))
        total += k
    return total
