#pragma once

#include <iosfwd>
#include <string>

#include "ftsdepth/boxplot.hpp"
#include "ftsdepth/depth.hpp"
#include "ftsdepth/detector.hpp"
#include "ftsdepth/sample.hpp"
#include "ftsdepth/wilcoxon.hpp"

namespace fts {

/// CSV layout: header "t,<t_1>,...,<t_p>", then one row per curve,
/// "<label>,v_1,...,v_p". UTF-8, '.' decimal separator, LF line endings.
/// Values are printed with 17 significant digits, so a save/load round
/// trip reproduces every double bit for bit. Parse errors carry 1-based
/// row/column coordinates.
FunctionalSample load_sample_csv(std::istream& in);
void save_sample_csv(const FunctionalSample& sample, std::ostream& out);
FunctionalSample load_sample_csv_file(const std::string& path);
void save_sample_csv_file(const FunctionalSample& sample, const std::string& path);

std::string sample_to_json(const FunctionalSample& sample);
FunctionalSample sample_from_json(const std::string& text);

/// index,value rows.
void save_depth_csv(const DepthVector& depths, std::ostream& out);
std::string depth_to_json(const DepthVector& depths);
void save_ranks_csv(const RankVector& rank_vector, std::ostream& out);
std::string ranks_to_json(const RankVector& rank_vector);

std::string wilcoxon_to_json(const WilcoxonResult& result);

/// k,statistic,p_value rows (p_value column empty when absent).
void save_trace_csv(const DetectionTrace& trace, std::ostream& out);
std::string change_report_to_json(const ChangeReport& report);

/// t,median,central_lower,central_upper,fence_lower,fence_upper rows; the
/// sample provides the grid and the median curve's values.
void save_boxplot_csv(const BoxplotSummary& summary, const FunctionalSample& sample,
                      std::ostream& out);
std::string boxplot_to_json(const BoxplotSummary& summary);

const char* rank_scheme_name(RankScheme scheme);
RankScheme rank_scheme_from_name(const std::string& name);
const char* p_method_name(PValueMethod method);

} // namespace fts
