"""Essential ideal graphs of Z_n: structure, spectra, and connectivity.

Core pipeline: factor n, enumerate the ideal lattice, build the essential
ideal graph definitionally and via its class decomposition, compute the four
matrix spectra both from quotient-matrix closed forms and by brute-force
eigensolves, and classify the connectivity invariants.  A FastAPI service and
a CLI expose the same reports.
"""

__version__ = "0.1.0"

from .ideals import DomainError, Factorization, factorize
from .eigen import Spectrum, symmetric_eigenvalues
from .graphs import LabeledGraph
from .structure import assemble_structured, build_essential_graph_bruteforce, verify_structure
from .spectra import spectrum_bruteforce, spectrum_via_theorem
from .connectivity import ConnectivityReport, classify

__all__ = [
    "DomainError",
    "Factorization",
    "factorize",
    "Spectrum",
    "symmetric_eigenvalues",
    "LabeledGraph",
    "assemble_structured",
    "build_essential_graph_bruteforce",
    "verify_structure",
    "spectrum_bruteforce",
    "spectrum_via_theorem",
    "ConnectivityReport",
    "classify",
    "__version__",
]
