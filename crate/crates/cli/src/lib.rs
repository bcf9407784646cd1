//! Library side of the harness: input sniffing, fixtures, theorem-audit
//! campaigns, and machine-readable reports.

pub mod campaigns;
pub mod fixtures;
pub mod input;
pub mod report;
