pub mod gf;
pub mod linalg;
pub mod code;
pub mod trs;
pub mod recipe;
pub mod search;
pub mod cli;
