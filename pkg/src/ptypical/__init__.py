"""Artin-Schreier torsors, ramification breaks and height functions over toric charts."""

from ._infinity import INF, NEG_INF
from .as_extension import ExtElem, ext_as_reduce, ext_valuation, rebase, tower2_break
from .census import (brute_force_isomorphic, census_report, enumerate_as_classes,
                     rays_through_support, verify_splits2_torsor)
from .cones import (Cone, Halfspace, LinearFunctional, cone_contains, dual_cone, full_space,
                    is_very_convex, lattice_index, m_lambda, orthant, ray, zero_cone)
from .errors import InstanceTooLarge, PrecisionExhausted, PtypicalError
from .field_series import (ASNormalForm, LaurentSeries, as_break, as_reduce, frobenius_minus_one,
                           torsor_isomorphic)
from .finite_field import GF, FqElem, get_field
from .heights import (HeightQuery, c_lambda_linear, h_lambda_as, h_U_as, height_splits_check)
from .ramification import PhiPsi, break_compose, phi_compose, phi_single, psi_eval, tower_break_bound
from .toric_algebra import (CokerBasis, Diagram, MapDescriptor, ToricDatum, check_map_p_properties,
                            check_p_limit_bounded, coker_basis_bounded, coker_normal_form,
                            restrict_as, v_lambda)

__version__ = "0.1.0"
