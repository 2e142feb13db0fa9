import numpy as np

# 3x3 matrices are flat row-major tuples of integer field encodings.

IDENTITY = (1, 0, 0, 0, 1, 0, 0, 0, 1)


def mat_mul(ctx, a, b):
    add, mul = ctx.add, ctx.mul
    out = []
    for i in range(3):
        r = 3 * i
        for j in range(3):
            out.append(
                add(add(mul(a[r], b[j]), mul(a[r + 1], b[3 + j])), mul(a[r + 2], b[6 + j]))
            )
    return tuple(out)


def mat_vec(ctx, a, v):
    add, mul = ctx.add, ctx.mul
    return tuple(
        add(add(mul(a[3 * i], v[0]), mul(a[3 * i + 1], v[1])), mul(a[3 * i + 2], v[2]))
        for i in range(3)
    )


def transpose(a):
    return (a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8])


def entrywise_pow(ctx, a, e):
    return tuple(ctx.pow(x, e) for x in a)


def scale(ctx, a, c):
    return tuple(ctx.mul(c, x) for x in a)


def minus_scalar(ctx, a, lam):
    return tuple(ctx.sub(x, lam) if i in (0, 4, 8) else x for i, x in enumerate(a))


def det3(ctx, a):
    add, sub, mul = ctx.add, ctx.sub, ctx.mul
    t0 = mul(a[0], sub(mul(a[4], a[8]), mul(a[5], a[7])))
    t1 = mul(a[1], sub(mul(a[3], a[8]), mul(a[5], a[6])))
    t2 = mul(a[2], sub(mul(a[3], a[7]), mul(a[4], a[6])))
    return add(sub(t0, t1), t2)


def inverse3(ctx, a):
    """Inverse through the adjugate. Raises DivisionByZero for singular input."""
    sub, mul = ctx.sub, ctx.mul

    def minor(r0, r1, c0, c1):
        return sub(mul(a[3 * r0 + c0], a[3 * r1 + c1]), mul(a[3 * r0 + c1], a[3 * r1 + c0]))

    inv_det = ctx.inv(det3(ctx, a))
    adj = (
        minor(1, 2, 1, 2),
        ctx.neg(minor(0, 2, 1, 2)),
        minor(0, 1, 1, 2),
        ctx.neg(minor(1, 2, 0, 2)),
        minor(0, 2, 0, 2),
        ctx.neg(minor(0, 1, 0, 2)),
        minor(1, 2, 0, 1),
        ctx.neg(minor(0, 2, 0, 1)),
        minor(0, 1, 0, 1),
    )
    return scale(ctx, adj, inv_det)


def normalize(ctx, a):
    """Scale a matrix or vector so that its first nonzero entry is 1."""
    for x in a:
        if x:
            if x == 1:
                return tuple(a)
            return scale(ctx, a, ctx.inv(x))
    raise ValueError("Cannot normalize the zero matrix")


def char_poly(ctx, a):
    """Coefficients [c0, c1, c2, 1] of det(xI - a)."""
    add, sub, mul = ctx.add, ctx.sub, ctx.mul
    trace = add(add(a[0], a[4]), a[8])
    minors = add(
        add(sub(mul(a[0], a[4]), mul(a[1], a[3])), sub(mul(a[0], a[8]), mul(a[2], a[6]))),
        sub(mul(a[4], a[8]), mul(a[5], a[7])),
    )
    return [ctx.neg(det3(ctx, a)), minors, ctx.neg(trace), 1]


def row_reduce(ctx, rows):
    """Reduced row echelon form of a list of rows; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    n_cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ctx.inv(m[r][c])
        m[r] = [ctx.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(ctx, a):
    return len(row_reduce(ctx, [a[0:3], a[3:6], a[6:9]])[1])


def nullspace(ctx, a):
    """Basis of {v : a v = 0} for a flat 3x3 matrix, each vector normalized."""
    reduced, pivots = row_reduce(ctx, [a[0:3], a[3:6], a[6:9]])
    basis = []
    for free in (c for c in range(3) if c not in pivots):
        v = [0, 0, 0]
        v[free] = 1
        for row, c in zip(reduced, pivots):
            v[c] = ctx.neg(row[free])
        basis.append(tuple(v))
    return basis


def batch_mul(ctx, xs, b):
    """Right-multiply every row of an (N, 9) array by the flat matrix b."""
    out = np.zeros_like(xs)
    for i in range(3):
        for j in range(3):
            acc = ctx.vmul(xs[:, 3 * i], b[j])
            acc = ctx.vadd(acc, ctx.vmul(xs[:, 3 * i + 1], b[3 + j]))
            acc = ctx.vadd(acc, ctx.vmul(xs[:, 3 * i + 2], b[6 + j]))
            out[:, 3 * i + j] = acc
    return out


def batch_normalize(ctx, xs):
    first = np.argmax(xs != 0, axis=1)
    lead = xs[np.arange(len(xs)), first]
    return ctx.vmul(xs, ctx.vinv(lead)[:, None])
