//! Ford circles, the tangency points `X(i)` of tree nodes, and the
//! horocycle token sequences that walk through them level by level.

mod ford;
mod svg;
mod tokens;

pub use ford::{
    are_tangent, ford_circle, geodesic_return, matrix_tangent_point, tangency_point, three_tangent,
    FordCircle, GeodesicEndpoints, TangentPoint,
};
pub use svg::render_ford_svg;
pub use tokens::{
    compose_tokens, level_start, level_tokens, level_tokens_from_origin, move_exponent, HoroToken,
    Letter, TokenRow,
};
