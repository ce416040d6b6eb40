//! Cayley graphs whose automorphism group is exactly the group acting by
//! translations.
//!
//! * [`groups`]: exact group oracles, structure predicates and the exception
//!   lists for graphical, digraphical and oriented regular representations.
//! * [`cayley`]: Cayley (di)graphs and triangle censuses.
//! * [`construct`]: the triangle-counting augmentation pipeline producing a
//!   generating set whose Cayley graph is rigid.
//! * [`autgrp`]: automorphism groups of finite (di)graphs and the
//!   verification suite.
//! * [`randwalk`]: exact and Monte Carlo random-walk probabilities.
//! * [`cli`]: the `grr` command-line interface.

pub mod autgrp;
pub mod cayley;
pub mod cli;
pub mod construct;
pub mod error;
pub mod groups;
pub mod randwalk;
pub mod set;

pub use error::{Error, Result};
