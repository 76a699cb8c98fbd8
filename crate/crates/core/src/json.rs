use num_bigint::BigInt;
use serde_json::Value;

/// JSON number when the value fits in an `i64`, decimal string otherwise.
pub fn big(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}
