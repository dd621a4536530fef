#ifndef SPATREG_DATASET_HPP
#define SPATREG_DATASET_HPP

#include "spatreg/common.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace spatreg {

enum class ColumnKind { response, coordinate_x, coordinate_y, continuous, categorical };

const char* to_string(ColumnKind kind);

/// One column of the input table. Categorical columns carry their category
/// list in declared order plus the reference category that is dropped in
/// the one-hot encoding.
struct ColumnSchema {
    std::string name;
    ColumnKind kind = ColumnKind::continuous;
    std::vector<std::string> categories;
    std::string reference_category;
};

using Schema = std::vector<ColumnSchema>;

/// Throws InvalidInput unless the schema has exactly one response, one
/// coordinate_x and one coordinate_y column, and every categorical column
/// has >= 2 categories with the reference among them.
void validate_schema(const Schema& schema);

/// Schema config grammar, one column per line:
///   <name> = response | coordinate_x | coordinate_y | continuous
///   <name> = categorical(<c1>, <c2>, ...) [ref=<ci>]
/// '#' starts a comment; blank lines ignored; ref defaults to the first
/// declared category.
Schema parse_schema_text(const std::string& text);
Schema parse_schema_file(const std::string& path);
std::string schema_to_text(const Schema& schema);

/// Numeric form every model consumes. X carries an explicit all-ones
/// intercept in column 0; categoricals are one-hot encoded with the
/// reference category dropped. Immutable by convention after construction.
struct SpatialDataset {
    Vector y;                               // response (e.g. log rent)
    Matrix X;                               // n x K design matrix
    Matrix coords;                          // n x 2 planar km
    std::vector<std::string> feature_names; // length K

    Index n() const { return y.size(); }
    Index num_features() const { return X.cols(); }
};

struct SplitIndices {
    std::vector<Index> train;
    std::vector<Index> test;
    std::uint64_t seed = 0;
};

struct LoadOptions {
    /// When set, rows with blank cells are silently dropped (the paper's
    /// preprocessing); otherwise a blank cell is an error naming the row.
    bool drop_missing = false;
};

SpatialDataset load_csv(const std::string& path, const Schema& schema,
                        const LoadOptions& options = {});
SpatialDataset load_csv_stream(std::istream& in, const Schema& schema,
                               const LoadOptions& options = {},
                               const std::string& source_name = "<stream>");

/// Per-column mean/sd transform record; applying it to new data reproduces
/// the training-time transform exactly.
struct Standardization {
    std::vector<Index> columns;
    Vector mean;
    Vector sd;

    void apply(Matrix& X) const;
    void invert(Matrix& X) const;
};

/// Standardizes the selected X columns to sample mean 0, sd 1 (n-1
/// denominator). Throws on zero-variance columns.
std::pair<SpatialDataset, Standardization>
standardize(const SpatialDataset& ds, const std::vector<Index>& columns);

/// Deterministic random 80/20-style partition: |train| = round(fraction*n).
SplitIndices random_split(Index n, double fraction, std::uint64_t seed);

/// Row subset preserving column metadata (split materialization, CV folds).
SpatialDataset subset(const SpatialDataset& ds, const std::vector<Index>& rows);

/// X-column indices of the schema's continuous features (intercept and
/// dummy blocks excluded) in encoding order.
std::vector<Index> continuous_feature_indices(const Schema& schema);

/// Recovers the category label of `row` for the named categorical column
/// from its dummy block (the encode -> decode round trip).
std::string decode_category(const SpatialDataset& ds, const Schema& schema,
                            Index row, const std::string& column_name);

} // namespace spatreg

#endif
