//! Bifurcation structure of one-parameter families of C¹ unimodal maps.
//!
//! The crate has three layers. `symbolic` is exact combinatorics on the full
//! 2-shift: admissible sequences, the parity ordering, the twin map µ, the
//! pairing map ν, and shuffles. `family`/`dynamics`/`quotient` form the
//! numeric layer: evaluatable map families, horseshoe certification,
//! itineraries, the quotient map G_m and its sampled zero set with labeled
//! periodic point components. `planar` is a pixel-grid analogue of the
//! planar-separation machinery (fillings, complement components, separating
//! paths and chords), and `verify` ties the layers together by checking that
//! the numeric endpoint pairing at t = 1 equals the symbolic ν-matching.

pub mod dynamics;
pub mod emit;
pub mod family;
pub mod planar;
pub mod quotient;
pub mod symbolic;
pub mod verify;
