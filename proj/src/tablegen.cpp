#include "zernike/tablegen.hpp"

#include <string>

#include "zernike/errors.hpp"
#include "zernike/symbolic.hpp"

namespace zernike {

void TableSpec::validate() const {
  if (attrib_names.size() != zernike_table_columns)
    throw DomainError(DomainErrorKind::bad_argument,
                      "table rows have " + std::to_string(zernike_table_columns) +
                          " columns, got " + std::to_string(attrib_names.size()) + " names");
  if (j_min < 1)
    throw DomainError(DomainErrorKind::index_below_one,
                      "j_min must be >= 1, got " + std::to_string(j_min));
  if (j_min > j_max)
    throw DomainError(DomainErrorKind::empty_range,
                      "j_min=" + std::to_string(j_min) + " exceeds j_max=" + std::to_string(j_max));
  if (j_max > max_noll_index)
    throw DomainError(DomainErrorKind::index_too_large, "j_max exceeds the supported range");
}

namespace {

void hline(TextSink& sink) { sink << "\\hline\n"; }

void table_head(TextSink& sink, const TableSpec& spec) {
  for (std::size_t c = 0; c < spec.attrib_names.size(); ++c) {
    if (c != 0) sink << " & ";
    sink << spec.attrib_names[c];
  }
  sink << " \\\\\n";
}

}  // namespace

void gen_table_line(TextSink& sink, NollIndex j) {
  const BwIndex idx = j_to_nm(j);
  sink << " $" << std::to_string(j.value()) << "$  & $" << std::to_string(idx.n()) << "$  & $"
       << std::to_string(idx.m()) << "$";
  sink << "  &$";
  emit_normalization(sink, idx);
  sink << "$";
  sink << "  &$";
  emit_unnormalized_zernike(sink, idx);
  sink << "$\\\\\n";
}

void gen_long_table(TextSink& sink, const TableSpec& spec) {
  spec.validate();
  sink << "\\begin{center}\n";
  sink << "\\begin{longtable}{" << spec.align_ctrl << "}\n";
  sink << "\\caption{" << spec.caption << "}\\\\\n";
  hline(sink);
  table_head(sink, spec);
  hline(sink);
  sink << "\\endfirsthead\n";
  sink << "\\caption[]{" << spec.caption_continue << "}\\\\\n";
  hline(sink);
  table_head(sink, spec);
  hline(sink);
  sink << "\\endhead\n";
  hline(sink);
  sink << "\\endfoot\n";
  hline(sink);
  sink << "\\endlastfoot\n";
  for (std::int64_t j = spec.j_min; j <= spec.j_max; ++j) gen_table_line(sink, NollIndex(j));
  hline(sink);
  sink << "\\end{longtable}\n";
  sink << "\\end{center}\n";
}

void gen_main_body(TextSink& sink, const TableSpec& spec) {
  spec.validate();
  sink << "\\begin{document}\n\n";
  sink << "\\maketitle\n\n";
  sink << "\n";
  gen_long_table(sink, spec);
  sink << "\n";
  sink << "\\end{document}\n";
}

void gen_preamble(TextSink& sink) {
  sink << "\\documentclass[11pt,a4paper]{article}\n";
  sink << "\\usepackage{amsmath}\n";
  sink << "\\usepackage{longtable}\n";
  sink << "\n";
  sink << "\\title{Table of Zernike Circular Polynomials}\n";
  sink << "\\author{}\n";
  sink << "\\date{}\n";
  sink << "\n";
}

void gen_document(TextSink& sink, const TableSpec& spec) {
  spec.validate();
  gen_preamble(sink);
  gen_main_body(sink, spec);
}

}  // namespace zernike
