//! Expression parsing for the qmcli binary, exposed as a library so the
//! round-trip tests can drive the grammar directly.

pub mod expr;
