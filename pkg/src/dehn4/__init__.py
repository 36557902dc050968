"""dehn4: exact-arithmetic obstruction pipelines for embedded balls and
solid tori in the boundaries of 4-manifolds.

Subpackages by topic:
  surgery     surgery presentations, curves, linking matrices
  linking     Smith normal form, homology, surgery linking numbers,
              self-linking forms and their zero classes
  seifert     Seifert matrices, Alexander polynomials, signatures,
              Fox-Milnor, sliceness verdicts
  forms       symmetric unimodular forms, even classification, splitting
              enumeration under Rokhlin constraints, lens-space QR test
  legendrian  tb/rot from front counts, Stein condition, slice-Bennequin
  twists      Dehn-twist classes on a torus and extension subgroups
  scenarios   the named end-to-end obstruction reports
"""

from .scenarios import Report, Scenario, Verdict, build_scenario, run_scenario
from .report import render

__version__ = "0.1.0"

__all__ = [
    "Report",
    "Scenario",
    "Verdict",
    "build_scenario",
    "run_scenario",
    "render",
    "__version__",
]
