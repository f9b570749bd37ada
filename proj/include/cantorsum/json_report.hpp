#pragma once

#include "json.hpp"

#include "cantorsum/ap.hpp"
#include "cantorsum/cantor_struct.hpp"
#include "cantorsum/generator.hpp"
#include "cantorsum/intset.hpp"
#include "cantorsum/theorems.hpp"

namespace cantorsum {

using json = nlohmann::ordered_json;

json digits_to_json(const Digits& d);
json table_to_json(const GeneratorTable& t);
json gaps_to_json(const std::vector<Gap>& gs);
json shift_invariance_to_json(const ShiftInvarianceReport& r);
json ap_witness_to_json(const APWitness& ap);
json vdw_certificate_to_json(const VdwCertificate& c);
json bounded_gap_extract_to_json(const BoundedGapExtract& e);
json sum_witness_to_json(const SumWitness& w);
json y_membership_to_json(const YMembershipReport& r);
json ap_content_to_json(const APContentReport& r);
json sumset_cover_to_json(const SumsetCoverReport& r);
json density_report_to_json(const DensityReport& r);
json recovered_to_json(const RecoveredGenerators& r);

std::string rational_str(const mpq_class& q);

}  // namespace cantorsum
