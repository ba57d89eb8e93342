"""Pure-Python bitmask kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` must agree
with these bit for bit.  Diagonal sets are ints with bit ``i`` standing
for the ``i``-th diagonal of the polygon in lexicographic order.
"""


def closure(ndiag, mask, pair_i, pair_j, pair_req):
    """Smallest superset of ``mask`` closed under the crossing rule.

    ``(pair_i[k], pair_j[k])`` runs over crossing diagonal pairs and
    ``pair_req[k]`` is the mask of diagonals they force.
    """
    npairs = len(pair_i)
    changed = True
    while changed:
        changed = False
        for k in range(npairs):
            if (mask >> pair_i[k]) & 1 and (mask >> pair_j[k]) & 1:
                req = pair_req[k]
                if req & ~mask:
                    mask |= req
                    changed = True
    return mask


def enumerate_closed(ndiag, pair_i, pair_j, pair_req):
    """All closed masks in lectic order (Ganter's NextClosure)."""
    full = (1 << ndiag) - 1
    a = closure(ndiag, 0, pair_i, pair_j, pair_req)
    out = [a]
    while a != full:
        for i in range(ndiag - 1, -1, -1):
            bit = 1 << i
            if a & bit:
                a &= ~bit
                continue
            b = closure(ndiag, a | bit, pair_i, pair_j, pair_req)
            if (b & ~a) & (bit - 1) == 0:
                a = b
                out.append(a)
                break
    return out


def count_downsets(preds):
    """Count subsets S of ``range(len(preds))`` such that every ``r`` in S
    has ``preds[r]`` (a bitmask) inside S."""
    k = len(preds)
    count = 0
    for sub in range(1 << k):
        for r in range(k):
            if sub >> r & 1 and preds[r] & ~sub:
                break
        else:
            count += 1
    return count
