//! Applications: sl₂ restricted Kostka polynomials, Virasoro characters and
//! dimensions of spaces of nonabelian theta functions.

pub mod sl2;
pub mod theta;
pub mod virasoro;

pub use sl2::{kbar_closed, kbar_skew_closed, kostka_two_row};
pub use theta::{dual_label, omega, theta_dim, theta_dim_split, theta_qdim};
pub use virasoro::{
    rocha_caridi, stabilization_window, virasoro_limit_check, LimitReport, QSeriesTruncation,
    VirasoroLabel,
};
