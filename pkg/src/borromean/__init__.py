"""Exact and numerical computation in the Borromean-rings orbifold groups.

The Euclidean side works with exact integer isometries of the cube
tessellation (the crystallographic group I2_12_12_1): membership, axis
geometry, the two canonical families of rotation-generated finite-index
subgroups, and their classification.  The hyperbolic side realizes the
90-degree group numerically through Lorentz matrices acting on the
right-angled dodecahedral tessellation, and labels rotation axes with
Eisenstein integers.
"""

from .errors import (BadParams, BorromeanError, DegenerateAxis, DepthTooLarge,
                     EmptyPlane, FamilyMismatch, IdentityElement,
                     InfiniteIndex, NotARotation, NotInUhat,
                     VerificationInconclusive)
from .words import Word, RELATORS_EUCLID, RELATORS_HYPERBOLIC
from .euclid import (IntIsometry, RotationAxis, ScrewReport, IDENTITY,
                     generators_uhat, diagonal_rotation, compose, invert,
                     conjugate, in_uhat, in_shat, axis_of, rotation_about,
                     eval_phi, word_for_element, transform_axis)
from .lattice import IntegerLattice
from .families import (AbelianClass, Box, CanonicalSubgroup, abelianize, box,
                       construct_index, count_cube_orbits, group_G, group_H,
                       index, lift_generators, member, triple,
                       witness_rotations)
from .classify import (AxisPointSet, ClassificationResult, Plane,
                       RectangleReport, axis_points, bfs_elements, classify,
                       check_rectangle_structure, translation_lattice,
                       verify_rectangle)

__version__ = "0.1.0"
