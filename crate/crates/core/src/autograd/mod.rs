pub mod ops;
pub mod optim;
