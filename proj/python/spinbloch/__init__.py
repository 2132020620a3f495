# Copyright 2026 The spinbloch Authors
# SPDX-License-Identifier: Apache-2.0
"""Tensor (generalized Bloch) representation of spin-j density matrices.

Spins are given as ``two_j`` (twice the spin); matrices use the basis
ordering m = j, j-1, ..., -j.
"""

from ._spinbloch import *  # noqa: F401,F403
from ._spinbloch import __version__, CriterionDisagreement, CoordinateTensor  # noqa: F401
