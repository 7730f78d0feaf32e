#ifndef FUCHSQ_IO_HPP
#define FUCHSQ_IO_HPP

#include "fuchsq/extension.hpp"
#include "fuchsq/semistab.hpp"
#include "fuchsq/verify.hpp"

namespace fuchsq {

// Line-oriented instance format:
//   fuchsq 1
//   rank N
//   genus G
//   marked P1 P2 ...          (points as rationals or "inf")
//   A
//   <N rows of N whitespace-separated expressions in z>
//   frame P                   (optional, repeatable; w-expressions at inf)
//   <N rows>
//   end
LogConnection parse_instance(const std::string& text);
std::string print_instance(const LogConnection& conn);

struct GaugeFile {
    Point point;
    RatMatrix h;
};

GaugeFile parse_gauge(const std::string& text);
std::string print_gauge(const Point& p, const RatMatrix& h);

// Extension datum format:
//   fuchsq-ext 1
//   sub-degree A
//   quot-degree B
//   marked ...
//   cochain EXPR
//   d-sub EXPR
//   d-quot EXPR
//   end
ExtensionDatum parse_extension(const std::string& text);
std::string print_extension(const ExtensionDatum& ext);

std::string print_step_log(const StepLog& log);
std::string print_screen_report(const ScreenReport& report);
std::string print_pipeline_report(const PipelineReport& report);
std::string print_obstruction(const ObstructionClass& oc);

std::string join_rats(const std::vector<Rat>& v);

}  // namespace fuchsq

#endif
