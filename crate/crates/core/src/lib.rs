// Copyright 2026 The boson-sampler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Simulation of a small boson-sampling experiment with partially
//! distinguishable photons.
//!
//! The crate covers the whole numerical pipeline on synthetic data:
//!
//! * [`kernels`]: permanent (Ryser, Gray-code order), determinant and the
//!   3x3 immanant, with brute-force references in [`oracle`];
//! * [`interference`]: two- and three-photon coincidence probabilities
//!   through a lossy transfer matrix;
//! * [`sampler`]: no-collision output distributions and seeded event streams;
//! * [`validation`]: the row-norm counter against a uniform sampler and the
//!   `p_Q > p_C` counter against a distinguishable sampler;
//! * [`estimation`]: variation distance, statistical fidelity, the
//!   indistinguishability fit, beam-splitter indistinguishability and peak
//!   area extraction;
//! * [`source`]: brightness saturation and demultiplexed count rates;
//! * [`io`] and [`cli`]: file formats and the `bosonsim` command line.
//!
//! ```
//! use boson_sampler::io::reference_network;
//! use boson_sampler::interference::IndistinguishabilitySet;
//! use boson_sampler::sampler::boson_distribution;
//!
//! let network = reference_network();
//! let overlaps = IndistinguishabilitySet::for_triple([0, 1, 2], 0.520, 0.540, 0.643).unwrap();
//! let d = boson_distribution(&network, &[0, 1, 2], &overlaps).unwrap();
//! assert_eq!(d.len(), 20);
//! ```

// `!(x >= 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod estimation;
pub mod interference;
pub mod io;
pub mod kernels;
pub mod matrix;
pub mod oracle;
pub mod sampler;
pub mod source;
pub mod validation;

pub use error::{Error, Result};
pub use matrix::ComplexMatrix;
