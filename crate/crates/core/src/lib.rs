//! Exact interleaved multichromatic numbers of undirected graphs.
//!
//! The interleaved multichromatic number is computed as a min–max over the
//! acyclic orientations of a graph and its simple cycles. The crate also
//! carries the lexicographic-product machinery that relates interleaved
//! `k`-tuple colorings to layered orientations, brute-force reference
//! oracles, and a scheduling-by-edge-reversal simulator used as an
//! independent cross-check.
//!
//! Everything here is `no_std` and needs only `alloc`. File formats, the
//! command line and report serialization live in the `intchrom` crate.

#![no_std]
#![warn(clippy::std_instead_of_alloc)]
#![warn(clippy::std_instead_of_core)]

extern crate alloc;

mod error;
mod limits;
mod rational;

pub mod cycles;
pub mod evaluate;
pub mod graph;
pub mod oracle;
pub mod orientation;
pub mod product;
pub mod ser;

pub use self::{
    cycles::SimpleCycle,
    error::{Error, Result},
    evaluate::IntWitness,
    graph::{Graph, GraphBuilder},
    limits::Limits,
    orientation::{AcyclicOrientation, Digraph, DirectedPath},
    product::{KTupleColoring, LayeredOrientation, ProductGraph, WindingPath},
    rational::{ParseRationalError, Rational},
    ser::SerRun,
};
