pub mod catalog;
pub mod exactmath;
pub mod extension;
pub mod flow;
pub mod geometry;
pub mod liealg;
pub mod soliton;
