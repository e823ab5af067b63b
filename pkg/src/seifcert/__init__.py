"""seifcert: exact certificates for Seifert fibered L-spaces, correction
terms from plumbings, and tight contact structures."""

from .contact import (
    CertificateReport,
    ClassifyReport,
    ContactDiagram,
    LegendrianUnknotComponent,
    classify,
    d3,
    ding_geiges_chain,
    enumerate_candidates,
    identify_spinc,
    tightness_certificate,
)
from .errors import DomainError, InternalCheckError, ParseError
from .exact import (
    IntMatrix,
    Rational,
    eval_cf,
    format_rational,
    is_negative_definite,
    neg_cf,
    parse_rational,
    quad_value,
    signature,
    smith_form,
)
from .floer import (
    DTable,
    LinkingForm,
    ManifoldDTable,
    conjugate,
    d_invariants,
    d_invariants_bruteforce,
    embeds_in_diagonal,
    form_isomorphisms,
    linking_form,
    manifold_d_table,
    spinc_labels,
)
from .lspace import (
    LSpaceVerdict,
    RealizabilityWitness,
    has_positive_transverse_contact,
    has_transverse_foliation,
    is_lspace,
    realizability_witness,
)
from .seifert import (
    PlumbingTree,
    SeifertData,
    bad_vertex_count,
    euler_number,
    format_seifert,
    h1_order,
    normalize,
    parse_seifert,
    plumbing_tree,
    reverse_orientation,
    torus_surgery_seifert,
)
from .torusknot import (
    AlexanderData,
    alexander_torus,
    critical_d_multiset,
    d_critical_surgery,
    d_lens_n1,
    spin_d,
    torsion_coefficient,
    torsion_coefficients,
)

__version__ = "0.1.0"
