//! Library side of the command-line front end: the run pipeline, the text
//! and JSON exporters, and the SVG renderers.

pub mod export;
pub mod pipeline;
pub mod svg;
