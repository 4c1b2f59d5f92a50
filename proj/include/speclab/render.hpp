#pragma once
// Text, structured-document (JSON) and graph-description (DOT) emitters.
// All output is canonically ordered; identical inputs yield identical bytes.

#include <string>

#include "speclab/catmodel.hpp"
#include "speclab/rankfn.hpp"
#include "speclab/spectra.hpp"
#include "speclab/verify.hpp"

namespace speclab::render {

using json = nlohmann::ordered_json;

// Finite spaces.
std::string space_text(const spectra::FiniteSpace& sp);
json space_doc(const spectra::FiniteSpace& sp);
// Nodes are points; an edge a -> b means b lies in the closure of a
// (specialization), restricted to covering pairs.
std::string space_dot(const spectra::FiniteSpace& sp, const std::string& name);

// Thick-subcategory lattices (Hasse data computed on demand; covers are
// omitted beyond 4096 elements).
std::string lattice_text(const catmodel::Model& m, const spectra::ThickLattice& lat);
json lattice_doc(const catmodel::Model& m, const spectra::ThickLattice& lat);
std::string lattice_dot(const catmodel::Model& m, const spectra::ThickLattice& lat,
                        const std::string& name);

// Model summary (the full document form is catmodel::model_to_json).
std::string model_text(const catmodel::Model& m);

// Classification table.
std::string classify_text(const catmodel::Model& m, const spectra::Spectrum& sp,
                          const std::vector<spectra::ClassifyRow>& rows);
json classify_doc(const catmodel::Model& m, const spectra::Spectrum& sp,
                  const std::vector<spectra::ClassifyRow>& rows);

// Rank functions.
std::string rank_text(const catmodel::Model& m, const rankfn::RankFunction& rho);
json rank_doc(const catmodel::Model& m, const rankfn::RankFunction& rho);
std::string axioms_text(const rankfn::AxiomReport& rep);
json axioms_doc(const rankfn::AxiomReport& rep);

// Verification reports.
std::string report_text(const verify::Report& rep);
json report_doc(const verify::Report& rep);

}  // namespace speclab::render
