//! Link-level simulator and analytical toolkit for joint compressive-sensing +
//! power-domain NOMA uplink massive access (JSPMA).
//!
//! The crate is organised around the processing chain of a grant-free uplink:
//!
//! * [`mathcore`] — numeric substrate: chi-square (Gamma) distribution
//!   machinery, adaptive quadrature, complex least squares, Hermitian
//!   eigenvalues and reproducible seeded random streams.
//! * [`channel`] — i.i.d. Rayleigh channel generation, chi-square order
//!   statistics of channel gains, equal-mass gain split points and the
//!   Marchenko–Pastur eigenvalue model.
//! * [`power`] — user grouping and the geometric transmit-power ladder,
//!   in both distributed (own-gain) and centralized (rank) modes.
//! * [`phy`] — CRC framing, (2,1,7) convolutional coding, QPSK, random
//!   column-normalized precoding and received-signal synthesis.
//! * [`receiver`] — ICBOMP multi-user detection with successive
//!   interference cancellation.
//! * [`analysis`] — SINR/BER/FER prediction, single-user FER calibration
//!   curves, the theoretical FER recursion and the Monte-Carlo delta search.
//! * [`harness`] — experiment configuration, the Monte-Carlo trial loop and
//!   metric aggregation (BER/FER/UDSR) with CSV emission.
//!
//! The `jspma` binary exposes all of the above as CLI subcommands; see the
//! repository README for usage.

pub mod analysis;
pub mod channel;
pub mod cli;
pub mod harness;
pub mod mathcore;
pub mod phy;
pub mod power;
pub mod receiver;
