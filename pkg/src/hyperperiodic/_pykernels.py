"""Pure-Python kernels. Same contracts as ``_ckernels.pyx``."""
from math import gcd


def reduce_letters(letters):
    """Free reduction of a sequence of nonzero ints (``-x`` is the inverse of ``x``)."""
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def element_order(moduli, h):
    order = 1
    for n, r in zip(moduli, h):
        k = n // gcd(n, r % n)
        order = order * k // gcd(order, k)
    return order


def cone_orbits(moduli, h, cones):
    """Orbit data of ``h`` above each cone point of an abelian action.

    ``moduli`` is ``(a, b)`` for Z/a + Z/b, ``h`` an element, ``cones`` a list of
    ``(m, x0, x1)`` with ``x`` the image of the cone generator. Returns one
    ``(lam, nu, count)`` per cone: ``count`` orbits of isotropy order ``lam``
    on which the isotropy generator rotates by ``2*pi*nu/lam``.
    """
    a, b = moduli
    size = a * b
    h0, h1 = h[0] % a, h[1] % b
    ordh = element_order(moduli, (h0, h1))
    out = []
    for m, x0, x1 in cones:
        index = {}
        e0 = e1 = 0
        for c in range(m):
            index[(e0, e1)] = c
            e0 = (e0 + x0) % a
            e1 = (e1 + x1) % b
        d = ordh
        c = 0
        for k in range(1, ordh + 1):
            hit = index.get(((k * h0) % a, (k * h1) % b))
            if hit is not None:
                d, c = k, hit
                break
        lam = ordh // d
        nu = (c // (m // lam)) % lam if lam > 1 else 0
        out.append((lam, nu, (size // m) // d))
    return out


def vertex_classes(m, pairing):
    """Label polygon corners by their class after orientation-reversing gluing.

    Edge ``e`` runs from corner ``e`` to ``e + 1``; it is glued to ``pairing[e]``
    so that corner ``e`` meets ``pairing[e] + 1``. Labels are the smallest
    corner of each class.
    """
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in range(m):
        p = pairing[e]
        for u, v in ((e, (p + 1) % m), ((e + 1) % m, p)):
            ru, rv = find(u), find(v)
            if ru != rv:
                if ru < rv:
                    parent[rv] = ru
                else:
                    parent[ru] = rv
    return [find(x) for x in range(m)]
