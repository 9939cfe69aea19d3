pub mod cli;
pub mod fermat;
pub mod gmodule;
pub mod group_ring;
pub mod int;
pub mod lattice;
pub mod linalg;
pub mod statement;

pub use int::Int;
pub use statement::Statement;
