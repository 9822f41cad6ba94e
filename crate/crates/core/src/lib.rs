pub mod catalog;
pub mod classical;
pub mod engine;
pub mod exact;
pub mod families;
pub mod gz;
pub mod oracle;
pub mod par;
pub mod report;
pub mod sample;
pub mod spec;
pub mod tame;
