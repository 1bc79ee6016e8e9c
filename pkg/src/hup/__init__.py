"""Fourier extensions of measures on the parabola and Heisenberg uniqueness pairs."""
from __future__ import annotations

__version__ = "0.1.0"

from .density import (ComplexGaussian, Density, Gaussian, Hermite, OddBump, PhaseModulated,
                      SampleTable, SmoothBump, Translated, density_from_json, density_to_json,
                      fourier_transform_1d, moment, transform_table)
from .errors import (DegenerateEta, DegenerateFit, DomainError, HupError, NonConvergence,
                     PoleError, SpecError)
from .extension import (EvalPoint, ParabolaMeasure, extension_closed_form,
                        extension_gaussian_closed_form, extension_quadrature, extension_via_fy,
                        schrodinger_residual)
from .uniqueness import (Branch, BootstrapTrajectory, ExponentPair, Horizontal, LambdaSpec,
                         ThroughOrigin, VanishingReport, Vertical, bootstrap, c_lemma,
                         c_three_lines, decay_slope_fit, lambda_points, ns_margin,
                         power_admissible, power_witness, region_a_contains,
                         region_a_supremum, vanishing_check)
from .symmetry import (MoebiusParams, galilean_shift, map_lambda, pseudo_conformal_point,
                       pseudo_conformal_value, quadratic_modulation)
from .counterexample import (HTransform, build_counterexample, h_value, three_line_rigidity,
                             verify_h_identity)
