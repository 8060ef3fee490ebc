pub mod centralizer;
pub mod exactalg;
pub mod nilhecke;
pub mod peterson;
pub mod schubert;
pub mod symfunc;
pub mod verify;
pub mod weyl;
