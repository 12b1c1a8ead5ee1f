#ifndef EUCALC_JSON_IO_HPP
#define EUCALC_JSON_IO_HPP

/*
  Document codecs. One JSON schema per value kind, schemaVersion 1 at the top
  level, unknown fields rejected, load(save(x)) == x, and deterministic field
  order on save. Integers ride as JSON numbers while they fit in 64 bits and
  as decimal strings beyond that, so nothing ever goes through floating
  point.
*/

#include <string>
#include <vector>

#include <json.hpp>

#include "eucalc/behrend.hpp"
#include "eucalc/cell_space.hpp"
#include "eucalc/constructible.hpp"
#include "eucalc/harness.hpp"
#include "eucalc/motivic.hpp"

namespace eucalc::io {

using json = nlohmann::ordered_json;

json int_to_json(const Int& v);
Int int_from_json(const json& j, const std::string& path);

enum class DocKind { Space, Map, Cf, Behrend, K0Class, EuMatrix, Counterexample, Report };

DocKind sniff_kind(const json& doc, const std::string& path);

// Loaded documents with cross-references resolved by space name.
class DocumentSet {
public:
    void add(const json& doc, const std::string& path);

    SpacePtr space(const std::string& name, const std::string& path) const;

    const std::vector<SpacePtr>& spaces() const { return spaces_; }
    const std::vector<CellMap>& maps() const { return maps_; }
    const std::vector<ConstructibleFunction>& cfs() const { return cfs_; }
    const std::vector<BehrendData>& behrends() const { return behrends_; }
    const std::vector<MotivicClass>& k0classes() const { return k0classes_; }
    const std::vector<EuMatrix>& eumatrices() const { return eumatrices_; }
    const std::vector<AxiomInstance>& instances() const { return instances_; }
    const std::vector<json>& reports() const { return reports_; }

private:
    std::vector<SpacePtr> spaces_;
    std::vector<CellMap> maps_;
    std::vector<ConstructibleFunction> cfs_;
    std::vector<BehrendData> behrends_;
    std::vector<MotivicClass> k0classes_;
    std::vector<EuMatrix> eumatrices_;
    std::vector<AxiomInstance> instances_;
    std::vector<json> reports_;
};

// parse + schemaVersion gate
json parse_document(const std::string& text, const std::string& path);
json read_document_file(const std::string& filename);

json save_space(const CellSpace& space);
SpacePtr load_space(const json& doc, const std::string& path);

json save_map(const CellMap& map);
CellMap load_map(const json& doc, const DocumentSet& docs, const std::string& path);

json save_cf(const ConstructibleFunction& cf);
ConstructibleFunction load_cf(const json& doc, const DocumentSet& docs, const std::string& path);

json save_behrend(const BehrendData& b);
BehrendData load_behrend(const json& doc, const DocumentSet& docs, const std::string& path);

json save_k0(const MotivicClass& xi);
MotivicClass load_k0(const json& doc, const DocumentSet& docs, const std::string& path);

json save_eumatrix(const EuMatrix& eu);
EuMatrix load_eumatrix(const json& doc, const DocumentSet& docs, const std::string& path);

json save_instance(const AxiomInstance& instance);
AxiomInstance load_instance(const json& doc, const std::string& path);

json save_report(const HarnessReport& report);

json save_polynomial(const IntPolynomial& p, const std::string& variable);

}  // namespace eucalc::io

#endif
