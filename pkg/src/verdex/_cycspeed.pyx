# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled cyclotomic coefficient kernel.

Coefficients are arbitrary-precision Python ints; Cython removes the
interpreter overhead of the convolution/reduction loops.  The pure-Python
twin lives in `verdex._cycspeed_py` and must stay behaviourally identical.
"""


def mul_reduce(a, b, red, Py_ssize_t phi):
    """Multiply two length-phi coefficient vectors and reduce.

    `red[k]` is the length-phi coefficient vector of x^(phi+k) modulo the
    cyclotomic polynomial.  Returns a list of phi ints.
    """
    cdef Py_ssize_t i, j, k, n2 = 2 * phi - 1
    cdef list conv = [0] * n2
    cdef list out
    for i in range(phi):
        ai = a[i]
        if ai:
            for j in range(phi):
                bj = b[j]
                if bj:
                    conv[i + j] = conv[i + j] + ai * bj
    out = conv[:phi]
    for k in range(phi, n2):
        ck = conv[k]
        if ck:
            row = red[k - phi]
            for i in range(phi):
                ri = row[i]
                if ri:
                    out[i] = out[i] + ck * ri
    return out
