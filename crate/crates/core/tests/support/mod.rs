pub mod canvas;
pub mod oracle;
