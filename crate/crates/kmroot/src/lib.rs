//! File formats, rendering, and the verification run behind the `kmroot`
//! command-line tool.

pub mod commands;
pub mod format;
pub mod render;
pub mod report;
pub mod verify;
