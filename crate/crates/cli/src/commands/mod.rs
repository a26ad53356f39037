pub mod build_dt;
pub mod combine;
pub mod embed;
pub mod eval;
pub mod retrofit;
