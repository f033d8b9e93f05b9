#ifndef OPLX_MANIFEST_HPP
#define OPLX_MANIFEST_HPP

#include "oplx/model.hpp"

#include <string>

namespace oplx {

// On-disk form of a built code: shape, parity checks as sorted column
// lists per row, and the cell labels of every basis. Serialization is
// deterministic so written files are byte-stable.
struct CodeManifest {
    int format = 1;
    std::string model_kind;   // orthoplex3d | orthoplex4d | orthoplex-pd | toric-hgp | custom
    std::vector<int> sizes;
    std::vector<bool> periodic;
    CssCode code;
    std::string tool = "oplx 1.0";   // metadata only, excluded from comparisons
};

CodeManifest manifest_from_model(const std::string& kind, const OrthoplexModel& model);
CodeManifest manifest_from_code(const std::string& kind, const std::vector<int>& sizes,
                                const std::vector<bool>& periodic, const CssCode& code);

std::string manifest_to_json(const CodeManifest& m);
CodeManifest manifest_from_json(const std::string& text);

void save_manifest(const CodeManifest& m, const std::string& path);
CodeManifest load_manifest(const std::string& path);

// true when everything except the metadata field agrees bitwise
bool manifest_equal(const CodeManifest& a, const CodeManifest& b);

} // namespace oplx

#endif
