pub mod artin;
pub mod braid;
pub mod combing;
pub mod completed;
pub mod dyadic;
pub mod error;
pub mod free_group;
pub mod infperm;
pub mod permutation;
pub mod pure;
pub mod stream;
pub mod tower;
