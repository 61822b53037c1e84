pub mod scalars;
pub mod supergraded;
pub mod liesuper;
pub mod diagrams;
pub mod kontsevich;
pub mod linalg;
pub mod weightsys;
pub mod harness;
