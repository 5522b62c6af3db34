from .qpoly import ONE, ZERO, QPolynomial
from .extensions import (
    CorrelationTable,
    ForwardEvent,
    KahnSaksVector,
    LinearExtension,
    correlation_table,
    enumerate_extensions,
    event_count,
    event_probability,
    extension_bound,
    extension_count,
    extension_table,
    extensions,
    forward_event,
    kahn_saks_vector,
    one_third_statistic,
    q_vector,
    r_table,
    r_vector,
    stanley_sequence,
    weight,
)
