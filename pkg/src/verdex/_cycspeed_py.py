"""Pure-Python fallback for the cyclotomic coefficient kernel.

Same contract as the compiled `verdex._cycspeed`: dense convolution of two
numerator vectors followed by reduction modulo the cyclotomic polynomial,
using the precomputed reduction rows for x^(phi), ..., x^(2*phi-2).
All arithmetic is exact (Python ints).
"""


def mul_reduce(a, b, red, phi):
    """Multiply two length-phi coefficient vectors and reduce.

    `red[k]` is the length-phi coefficient vector of x^(phi+k) modulo the
    cyclotomic polynomial.  Returns a list of phi ints.
    """
    conv = [0] * (2 * phi - 1)
    for i in range(phi):
        ai = a[i]
        if ai:
            for j in range(phi):
                bj = b[j]
                if bj:
                    conv[i + j] += ai * bj
    out = conv[:phi]
    for k in range(phi, 2 * phi - 1):
        ck = conv[k]
        if ck:
            row = red[k - phi]
            for i in range(phi):
                ri = row[i]
                if ri:
                    out[i] += ck * ri
    return out
