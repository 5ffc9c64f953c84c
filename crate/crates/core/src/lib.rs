pub mod analytics;
pub mod constructions;
pub mod counting;
pub mod error;
pub mod exec;
pub mod geom;
pub mod interval;
pub mod oracle;
pub mod pslg;
pub mod random;
pub mod transform;
pub mod verify;
