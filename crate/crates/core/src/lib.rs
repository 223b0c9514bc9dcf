pub mod algebra;
pub mod cactus;
pub mod crystal;
pub mod demos;
pub mod growth;
pub mod hecke;
pub mod localrules;
pub mod oracles;
pub mod verify;
pub mod weights;
