#pragma once

#include "enumerate.hpp"
#include "filtration.hpp"
#include "parallel.hpp"
#include "perm.hpp"
#include "products.hpp"
#include "report.hpp"
#include "verify.hpp"
#include "version.hpp"
