pub mod corpus;
pub mod output;

mod cli;

pub use cli::run;
