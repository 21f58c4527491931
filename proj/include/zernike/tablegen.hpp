#pragma once

// LaTeX longtable generation for ranges of Zernike circular polynomials.

#include <cstdint>
#include <string>
#include <vector>

#include "zernike/indexing.hpp"
#include "zernike/text_sink.hpp"

namespace zernike {

/// Columns of every data row: j, n, m, N, R Theta.
inline constexpr std::size_t zernike_table_columns = 5;

struct TableSpec {
  std::string caption =
      "Zernike Circular Polynomials $Z_j(\\rho,\\theta)=N^m_n R^m_n(\\rho)\\Theta_m(\\theta)$";
  std::string caption_continue =
      "Zernike Circular Polynomials $Z_j(\\rho,\\theta)=N^m_n R^m_n(\\rho)\\Theta_m(\\theta)$ "
      "(continued)";
  std::vector<std::string> attrib_names = {"$j$", "$n$", "$m$", "$N^m_n$",
                                           "$R_n^m(\\rho)\\Theta_m(\\theta)$"};
  std::string align_ctrl = "ccrcp{0.55\\textwidth}";
  std::int64_t j_min = 1;
  std::int64_t j_max = 465;

  std::size_t n_cols() const noexcept { return attrib_names.size(); }
  std::int64_t n_rows() const noexcept { return j_max - j_min + 1; }

  /// Throws DomainError for an empty range, j_min < 1 or a column count
  /// other than zernike_table_columns.
  void validate() const;
};

/// One data row: " $j$  & $n$  & $m$  &$N$  &$R Theta$\\" plus newline.
void gen_table_line(TextSink& sink, NollIndex j);

/// center + longtable environment with repeated heads and feet and one row
/// per j in [j_min, j_max].
void gen_long_table(TextSink& sink, const TableSpec& spec);

/// \begin{document} ... \end{document} around the long table.
void gen_main_body(TextSink& sink, const TableSpec& spec);

/// Document class, packages and title metadata.
void gen_preamble(TextSink& sink);

/// Preamble followed by the main body.
void gen_document(TextSink& sink, const TableSpec& spec);

}  // namespace zernike
