#pragma once

#include "tcpkit/rational.hpp"
#include "tcpkit/linalg.hpp"
#include "tcpkit/tensor.hpp"
#include "tcpkit/monomials.hpp"
#include "tcpkit/complementarity.hpp"
#include "tcpkit/auxiliary.hpp"
#include "tcpkit/cone.hpp"
#include "tcpkit/verdict.hpp"
#include "tcpkit/falsify.hpp"
#include "tcpkit/lcp.hpp"
#include "tcpkit/tcp.hpp"
#include "tcpkit/class_check.hpp"
#include "tcpkit/io.hpp"
#include "tcpkit/corpus.hpp"
#include "tcpkit/paper_cases.hpp"
#include "tcpkit/report.hpp"
