# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled twins of the pure scan kernels in ``_scan_py``.

Same functions, same inputs, same outputs, element for element; callers may
mix the two backends freely.  Masks live in unsigned 64-bit words and scaled
masses in signed 64-bit words — the dispatcher in ``kernels`` only routes
instances here when every mask and the total mass fit.

Table builders return ``array.array`` objects ('Q' for masks, 'q' for
masses): indexable from Python exactly like the lists the pure backend
returns, and viewable as typed memory from the scan loops here.
"""

from array import array

from libc.stdint cimport int64_t, uint64_t


cdef inline int _low_index(uint64_t v) nogil:
    cdef int i = 0
    while not (v & 1):
        v >>= 1
        i += 1
    return i


cdef inline bint _has_member(const uint64_t[:] sorted_members, Py_ssize_t nm, uint64_t x) nogil:
    cdef Py_ssize_t lo = 0, hi = nm, mid
    while lo < hi:
        mid = (lo + hi) // 2
        if sorted_members[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo < nm and sorted_members[lo] == x


cdef object _mask_array(object seq):
    if isinstance(seq, array) and seq.typecode == "Q":
        return seq
    return array("Q", seq)


cdef object _mass_array(object seq):
    if isinstance(seq, array) and seq.typecode == "q":
        return seq
    return array("q", seq)


def _low_key(b):
    return b & -b


def closure(seeds, cap):
    """Close ``seeds`` (plus the empty set) under union/intersection/difference.

    Returns the sorted member masks, or None once the member count exceeds
    ``cap``.
    """
    cdef set members = {0}
    cdef Py_ssize_t limit = cap
    members.update(seeds)
    if len(members) > limit:
        return None
    cdef list frontier = list(members)
    cdef list produced
    cdef list snapshot
    cdef uint64_t x, y
    cdef uint64_t cand[4]
    cdef int j
    cdef object z
    while frontier:
        produced = []
        snapshot = list(members)
        for xo in frontier:
            x = xo
            for yo in snapshot:
                y = yo
                cand[0] = x | y
                cand[1] = x & y
                cand[2] = x & ~y
                cand[3] = y & ~x
                for j in range(4):
                    z = cand[j]
                    if z not in members:
                        members.add(z)
                        produced.append(z)
                        if len(members) > limit:
                            return None
        frontier = produced
    return sorted(members)


def refine_atoms(members):
    """Common refinement of the members, restricted to their union.

    The result is the list of atom masks, pairwise disjoint, sorted by their
    lowest element so atom numbering is canonical.
    """
    cdef object marr = _mask_array(members)
    cdef uint64_t[:] mv = marr
    cdef Py_ssize_t nm = len(marr), i
    cdef uint64_t carrier = 0, m, b, inner, outer
    for i in range(nm):
        carrier |= mv[i]
    cdef list blocks = [carrier] if carrier else []
    cdef list nxt
    for i in range(nm):
        m = mv[i]
        nxt = []
        for bo in blocks:
            b = bo
            inner = b & m
            outer = b & ~m
            if inner and outer:
                nxt.append(inner)
                nxt.append(outer)
            else:
                nxt.append(b)
        blocks = nxt
    blocks.sort(key=_low_key)
    return blocks


def atom_masks(int n, atoms):
    """For every subset mask s of the universe, the atom-index mask of atoms meeting s."""
    cdef object aarr = _mask_array(atoms)
    cdef uint64_t[:] av = aarr
    cdef Py_ssize_t k = len(aarr), i, s
    cdef Py_ssize_t full = (<Py_ssize_t>1) << n
    cdef object out = array("Q", bytes(8 * full))
    cdef uint64_t[:] ov = out
    cdef uint64_t elem_bit[64]
    cdef uint64_t a, rest, low, su
    for i in range(64):
        elem_bit[i] = 0
    for i in range(k):
        a = av[i]
        rest = a
        while rest:
            low = rest & (~rest + 1)
            elem_bit[_low_index(low)] = (<uint64_t>1) << i
            rest ^= low
    with nogil:
        for s in range(1, full):
            su = <uint64_t>s
            low = su & (~su + 1)
            ov[s] = ov[s ^ <Py_ssize_t>low] | elem_bit[_low_index(low)]
    return out


def union_table(atoms):
    """For every atom-index mask, the union of those atoms as a universe mask."""
    cdef object aarr = _mask_array(atoms)
    cdef uint64_t[:] av = aarr
    cdef Py_ssize_t k = len(aarr), a
    cdef Py_ssize_t full = (<Py_ssize_t>1) << k
    cdef object out = array("Q", bytes(8 * full))
    cdef uint64_t[:] ov = out
    cdef uint64_t au, low
    with nogil:
        for a in range(1, full):
            au = <uint64_t>a
            low = au & (~au + 1)
            ov[a] = ov[a ^ <Py_ssize_t>low] | av[_low_index(low)]
    return out


def mass_table(weights, inf_mask):
    """For every atom-index mask, the sum of its finite scaled weights.

    Infinite atoms contribute 0 here; callers must test ``mask & inf_mask``
    before trusting the finite part.
    """
    cdef object warr = _mass_array(weights)
    cdef int64_t[:] wv = warr
    cdef Py_ssize_t k = len(warr), a
    cdef uint64_t infm = inf_mask
    cdef Py_ssize_t full = (<Py_ssize_t>1) << k
    cdef object out = array("q", bytes(8 * full))
    cdef int64_t[:] ov = out
    cdef uint64_t au, low
    cdef int i
    cdef int64_t w
    with nogil:
        for a in range(1, full):
            au = <uint64_t>a
            low = au & (~au + 1)
            i = _low_index(low)
            w = 0 if (infm >> i) & 1 else wv[i]
            ov[a] = ov[a ^ <Py_ssize_t>low] + w
    return out


def scan_m(int n, members, finfam, amask, mass, union_tab, memset):
    """Local-approximability verdict per subset.

    E is in the class iff for every finite-measure member A the minimum of
    the localized distance d_A(E, B) over ring members B is exactly 0.  All
    d_A values are finite because A carries no infinite atoms.
    """
    cdef object marr = _mask_array(members)
    cdef object farr = _mask_array(finfam)
    cdef object am_arr = _mask_array(amask)
    cdef object ms_arr = _mass_array(mass)
    cdef object ut_arr = _mask_array(union_tab)
    cdef object srch_arr = array("Q", sorted(memset))
    cdef uint64_t[:] mv = marr
    cdef uint64_t[:] fv = farr
    cdef uint64_t[:] am = am_arr
    cdef int64_t[:] ms = ms_arr
    cdef uint64_t[:] ut = ut_arr
    cdef uint64_t[:] srch = srch_arr
    cdef Py_ssize_t nm = len(marr), nf = len(farr), ns = len(srch_arr)
    cdef Py_ssize_t full = (<Py_ssize_t>1) << n
    out = bytearray(full)
    cdef unsigned char[:] ov = out
    cdef Py_ssize_t e, ai, bi
    cdef uint64_t eu, a_set, cand
    cdef int ok
    cdef int64_t v, best
    with nogil:
        for e in range(full):
            eu = <uint64_t>e
            ok = 1
            for ai in range(nf):
                a_set = fv[ai]
                cand = ut[<Py_ssize_t>am[<Py_ssize_t>(a_set & eu)]]
                if (
                    _has_member(srch, ns, cand)
                    and ms[<Py_ssize_t>am[<Py_ssize_t>(a_set & (eu ^ cand))]] == 0
                ):
                    continue
                best = -1
                for bi in range(nm):
                    v = ms[<Py_ssize_t>am[<Py_ssize_t>(a_set & (eu ^ mv[bi]))]]
                    if v == 0:
                        best = 0
                        break
                    if best < 0 or v < best:
                        best = v
                if best != 0:
                    ok = 0
                    break
            ov[e] = <unsigned char>ok
    return out


def scan_mca(int n, amask, mass, inf_mask, carrier):
    """Caratheodory verdict per subset: outer measure splits additively on every probe.

    Probes F outside the carrier, or touching an infinite atom, satisfy the
    equation automatically (both sides are infinite because the probe's two
    halves jointly meet the same atoms), so only covered finite probes are
    compared.
    """
    cdef object am_arr = _mask_array(amask)
    cdef object ms_arr = _mass_array(mass)
    cdef uint64_t[:] am = am_arr
    cdef int64_t[:] ms = ms_arr
    cdef uint64_t infm = inf_mask
    cdef uint64_t car = carrier
    cdef Py_ssize_t full = (<Py_ssize_t>1) << n
    cdef uint64_t fullmask = <uint64_t>(full - 1)
    cdef uint64_t notcar = fullmask & ~car
    out = bytearray(full)
    cdef unsigned char[:] ov = out
    cdef Py_ssize_t e, f
    cdef uint64_t eu, ec, fu, a
    cdef int good
    with nogil:
        for e in range(full):
            eu = <uint64_t>e
            ec = eu ^ fullmask
            good = 1
            for f in range(full):
                fu = <uint64_t>f
                if fu & notcar:
                    continue
                a = am[f]
                if a & infm:
                    continue
                if (
                    ms[<Py_ssize_t>a]
                    != ms[<Py_ssize_t>am[<Py_ssize_t>(fu & eu)]]
                    + ms[<Py_ssize_t>am[<Py_ssize_t>(fu & ec)]]
                ):
                    good = 0
                    break
            ov[e] = <unsigned char>good
    return out


def scan_mca_fin(int n, finfam, amask, mass):
    """Caratheodory verdict with probes restricted to finite-measure members."""
    cdef object farr = _mask_array(finfam)
    cdef object am_arr = _mask_array(amask)
    cdef object ms_arr = _mass_array(mass)
    cdef uint64_t[:] fv = farr
    cdef uint64_t[:] am = am_arr
    cdef int64_t[:] ms = ms_arr
    cdef Py_ssize_t nf = len(farr)
    cdef Py_ssize_t full = (<Py_ssize_t>1) << n
    cdef uint64_t fullmask = <uint64_t>(full - 1)
    out = bytearray(full)
    cdef unsigned char[:] ov = out
    cdef Py_ssize_t e, fi
    cdef uint64_t eu, ec, fu
    cdef int good
    with nogil:
        for e in range(full):
            eu = <uint64_t>e
            ec = eu ^ fullmask
            good = 1
            for fi in range(nf):
                fu = fv[fi]
                if (
                    ms[<Py_ssize_t>am[<Py_ssize_t>fu]]
                    != ms[<Py_ssize_t>am[<Py_ssize_t>(fu & eu)]]
                    + ms[<Py_ssize_t>am[<Py_ssize_t>(fu & ec)]]
                ):
                    good = 0
                    break
            ov[e] = <unsigned char>good
    return out


def scan_mco(int n, members, amask, mass, inf_mask, carrier, union_tab, memset, k):
    """Completion verdict per subset: some member is at global distance 0.

    Any set sticking out of the carrier has infinite distance to every
    member.  The candidate is the union of atoms fully inside E.
    """
    cdef object marr = _mask_array(members)
    cdef object am_arr = _mask_array(amask)
    cdef object ms_arr = _mass_array(mass)
    cdef object ut_arr = _mask_array(union_tab)
    cdef object srch_arr = array("Q", sorted(memset))
    cdef uint64_t[:] mv = marr
    cdef uint64_t[:] am = am_arr
    cdef int64_t[:] ms = ms_arr
    cdef uint64_t[:] ut = ut_arr
    cdef uint64_t[:] srch = srch_arr
    cdef Py_ssize_t nm = len(marr), ns = len(srch_arr)
    cdef uint64_t infm = inf_mask
    cdef uint64_t car = carrier
    cdef int kk = k
    cdef uint64_t kmask = (((<uint64_t>1) << kk) - 1) if kk else 0
    cdef Py_ssize_t full = (<Py_ssize_t>1) << n
    out = bytearray(full)
    cdef unsigned char[:] ov = out
    cdef Py_ssize_t e, si
    cdef uint64_t eu, contained, cand, x
    with nogil:
        for e in range(full):
            eu = <uint64_t>e
            if eu & ~car:
                continue
            contained = kmask & ~am[<Py_ssize_t>(e ^ (full - 1))]
            cand = ut[<Py_ssize_t>contained]
            x = am[<Py_ssize_t>(eu ^ cand)]
            if _has_member(srch, ns, cand) and not (x & infm) and ms[<Py_ssize_t>x] == 0:
                ov[e] = 1
                continue
            for si in range(nm):
                x = am[<Py_ssize_t>(eu ^ mv[si])]
                if not (x & infm) and ms[<Py_ssize_t>x] == 0:
                    ov[e] = 1
                    break
    return out


def scan_mco_fin(int n, members, finfam, amask, mass, union_tab, memset):
    """Localized completion verdict: per finite member A, some member is at d_A-distance 0."""
    cdef object marr = _mask_array(members)
    cdef object farr = _mask_array(finfam)
    cdef object am_arr = _mask_array(amask)
    cdef object ms_arr = _mass_array(mass)
    cdef object ut_arr = _mask_array(union_tab)
    cdef object srch_arr = array("Q", sorted(memset))
    cdef uint64_t[:] mv = marr
    cdef uint64_t[:] fv = farr
    cdef uint64_t[:] am = am_arr
    cdef int64_t[:] ms = ms_arr
    cdef uint64_t[:] ut = ut_arr
    cdef uint64_t[:] srch = srch_arr
    cdef Py_ssize_t nm = len(marr), nf = len(farr), ns = len(srch_arr)
    cdef Py_ssize_t full = (<Py_ssize_t>1) << n
    out = bytearray(full)
    cdef unsigned char[:] ov = out
    cdef Py_ssize_t e, ai, si
    cdef uint64_t eu, a_set, cand
    cdef int ok, found
    with nogil:
        for e in range(full):
            eu = <uint64_t>e
            ok = 1
            for ai in range(nf):
                a_set = fv[ai]
                cand = ut[<Py_ssize_t>am[<Py_ssize_t>(a_set & eu)]]
                if (
                    _has_member(srch, ns, cand)
                    and ms[<Py_ssize_t>am[<Py_ssize_t>(a_set & (eu ^ cand))]] == 0
                ):
                    continue
                found = 0
                for si in range(nm):
                    if ms[<Py_ssize_t>am[<Py_ssize_t>(a_set & (eu ^ mv[si]))]] == 0:
                        found = 1
                        break
                if not found:
                    ok = 0
                    break
            ov[e] = <unsigned char>ok
    return out
