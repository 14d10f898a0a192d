from .core import (
    X0,
    Bridge,
    BridgePath,
    CornerError,
    ExtendedGraph,
    WreathAlgebra,
    WreathElement,
    WreathError,
    act,
    ck_full,
    enumerate_bridge_paths,
    extend_graph,
    loop_extension,
    parse_extension,
    wreath_mul,
    wreath_normal_form,
)
from .decomposition import (
    LeavittCoefficients,
    Prop2Map,
    balloon_iso_check,
    prop2_decompose,
    prop2_phi,
    prop2_verify,
)
from .probes import (
    bridge_biset,
    lemma1_check,
    lemma2_check,
    lemma3_check,
    lemma4_check,
    lemma6_check,
    prop1_generators,
    prop1_search,
    quotient_check,
)
