#pragma once

#include "enumerate.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "kernel_cp.hpp"
#include "kernel_fen.hpp"
#include "kernel_nd_mw.hpp"
#include "kernel_tc.hpp"
#include "kernel_vc.hpp"
#include "methods.hpp"
#include "parameters.hpp"
#include "verify.hpp"
