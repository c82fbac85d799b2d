/// Placeholder.
pub struct E;
