//! Partitions, complete Bell polynomials, Stirling numbers of the first kind
//! and formal power series exponentiation.

mod bell;
mod partition;
mod series;
mod stirling;

pub use bell::{bell_eval, bell_eval_dyn, bell_sequence, RingElem};
pub use partition::{bell_coefficients, bell_partition_sum, enumerate_partitions, Partition};
pub use series::{
    det_bracket, falling_factorial_coeffs, log_power_coeffs, log_to_exp_series, series_pow_alpha,
    PowerSeriesCoeffs,
};
pub use stirling::{stirling1, stirling1_bell, stirling1_closed, stirling1_columns, stirling1_row};
