# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled trial kernel; behavioral mirror of _mc_python.run_trial.

Doubles are pulled straight off the bit generator with next_double, which
matches numpy's Generator.random stream bit for bit, and every coordinate
is scaled by the field side at draw time in the same order as the numpy
kernel.  The counts returned here and there must always agree.
"""

from cpython.pycapsule cimport PyCapsule_GetPointer, PyCapsule_IsValid
from libc.math cimport fabs

import numpy as np

from numpy.random cimport bitgen_t

BACKEND = "compiled"


def run_trial(bit_generator, Py_ssize_t n_nodes, double side, double radius, bint wrap):
    """One uniform deployment plus one probe point.

    Returns (isolated, covered): the number of nodes with no neighbor
    within radius, and the number of nodes within radius of the probe.
    """
    cdef bitgen_t *rng
    cdef Py_ssize_t i, j
    cdef double probe_x, probe_y, dx, dy, alt, r2
    cdef long isolated = 0
    cdef long covered = 0
    cdef bint has_neighbor

    capsule = bit_generator.capsule
    if not PyCapsule_IsValid(capsule, "BitGenerator"):
        raise ValueError("expected a numpy BitGenerator")
    rng = <bitgen_t *> PyCapsule_GetPointer(capsule, "BitGenerator")

    xs_arr = np.empty(n_nodes, dtype=np.float64)
    ys_arr = np.empty(n_nodes, dtype=np.float64)
    cdef double[::1] xs = xs_arr
    cdef double[::1] ys = ys_arr

    with bit_generator.lock:
        for i in range(n_nodes):
            xs[i] = rng.next_double(rng.state) * side
            ys[i] = rng.next_double(rng.state) * side
        probe_x = rng.next_double(rng.state) * side
        probe_y = rng.next_double(rng.state) * side

    r2 = radius * radius
    for i in range(n_nodes):
        has_neighbor = 0
        for j in range(n_nodes):
            if j == i:
                continue
            dx = fabs(xs[i] - xs[j])
            dy = fabs(ys[i] - ys[j])
            if wrap:
                alt = side - dx
                if alt < dx:
                    dx = alt
                alt = side - dy
                if alt < dy:
                    dy = alt
            if dx * dx + dy * dy <= r2:
                has_neighbor = 1
                break
        if not has_neighbor:
            isolated += 1

    for i in range(n_nodes):
        dx = fabs(xs[i] - probe_x)
        dy = fabs(ys[i] - probe_y)
        if wrap:
            alt = side - dx
            if alt < dx:
                dx = alt
            alt = side - dy
            if alt < dy:
                dy = alt
        if dx * dx + dy * dy <= r2:
            covered += 1

    return int(isolated), int(covered)
